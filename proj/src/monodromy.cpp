#include "obkirby/monodromy.hpp"

#include <cctype>
#include <charconv>
#include <numeric>
#include <sstream>

#include "obkirby/errors.hpp"
#include "obkirby/intmat.hpp"

namespace ob {

TwistWord identity_word(int genus, int curves) {
  TwistWord w;
  w.genus = genus;
  w.curves = curves;
  return w;
}

void check_twistword(const TwistWord& w) {
  if (w.genus < 0 || w.curves < 0) throw DomainError("negative twist-word context");
  for (const TwistFactor& f : w.factors) {
    if (const auto* t = std::get_if<TorusTwist>(&f)) {
      if (t->two_handle < 1 || t->two_handle > w.curves)
        throw DomainError("2-handle index out of range in t(" + std::to_string(t->two_handle) +
                          "," + std::to_string(t->one_handle) + ")");
      if (t->one_handle < 1 || t->one_handle > w.genus)
        throw DomainError("1-handle index out of range in t(" + std::to_string(t->two_handle) +
                          "," + std::to_string(t->one_handle) + ")");
    } else {
      const auto& s = std::get<SphereTwist>(f);
      if (s.two_handle < 1 || s.two_handle > w.curves)
        throw DomainError("2-handle index out of range in s(" + std::to_string(s.two_handle) +
                          ")");
    }
  }
}

TwistWord concat(const TwistWord& x, const TwistWord& y) {
  if (x.genus != y.genus || x.curves != y.curves)
    throw DomainError("context mismatch: cannot concatenate twist words on different pages");
  TwistWord out = x;
  out.factors.insert(out.factors.end(), y.factors.begin(), y.factors.end());
  return out;
}

namespace {

[[noreturn]] void bad_token(const std::string& tok) {
  throw ParseError("malformed twist factor '" + tok + "'");
}

long long read_int(const std::string& tok, std::size_t& i) {
  std::size_t start = i;
  if (i < tok.size() && (tok[i] == '-' || tok[i] == '+')) ++i;
  while (i < tok.size() && std::isdigit(static_cast<unsigned char>(tok[i]))) ++i;
  long long v = 0;
  auto [p, ec] = std::from_chars(tok.data() + start, tok.data() + i, v);
  if (ec != std::errc() || p != tok.data() + i || i == start) bad_token(tok);
  return v;
}

void expect(const std::string& tok, std::size_t& i, char ch) {
  if (i >= tok.size() || tok[i] != ch) bad_token(tok);
  ++i;
}

}  // namespace

TwistWord parse_twistword(std::string_view text, int genus, int curves) {
  TwistWord w = identity_word(genus, curves);
  std::istringstream is{std::string(text)};
  std::string tok;
  while (is >> tok) {
    std::size_t i = 0;
    if (tok[0] == 't') {
      i = 1;
      expect(tok, i, '(');
      long long j = read_int(tok, i);
      expect(tok, i, ',');
      long long l = read_int(tok, i);
      expect(tok, i, ')');
      if (i != tok.size()) bad_token(tok);
      w.factors.push_back(TorusTwist{static_cast<int>(j), static_cast<int>(l)});
    } else if (tok[0] == 's') {
      i = 1;
      expect(tok, i, '(');
      long long j = read_int(tok, i);
      expect(tok, i, ')');
      long long k = 1;
      if (i != tok.size()) {
        expect(tok, i, '^');
        k = read_int(tok, i);
        if (i != tok.size()) bad_token(tok);
      }
      w.factors.push_back(SphereTwist{static_cast<int>(j), k});
    } else {
      bad_token(tok);
    }
  }
  check_twistword(w);
  return w;
}

std::string serialize_twistword(const TwistWord& w) {
  std::string out;
  for (const TwistFactor& f : w.factors) {
    if (!out.empty()) out += ' ';
    if (const auto* t = std::get_if<TorusTwist>(&f)) {
      out += "t(" + std::to_string(t->two_handle) + "," + std::to_string(t->one_handle) + ")";
    } else {
      const auto& s = std::get<SphereTwist>(f);
      out += "s(" + std::to_string(s.two_handle) + ")";
      if (s.exponent != 1) out += "^" + std::to_string(s.exponent);
    }
  }
  return out;
}

std::vector<CocoreImage> cocore_images(const TwistWord& w) {
  check_twistword(w);
  std::vector<CocoreImage> images(static_cast<std::size_t>(w.curves));
  for (const TwistFactor& f : w.factors) {
    if (const auto* t = std::get_if<TorusTwist>(&f)) {
      images[t->two_handle - 1].pass_word.emplace_back(t->one_handle, 1);
    } else {
      const auto& s = std::get<SphereTwist>(f);
      CocoreImage& img = images[s.two_handle - 1];
      img.framing_offset = checked_add(img.framing_offset, s.exponent);
    }
  }
  return images;
}

TwistWord isotopy_normalize(const TwistWord& w) {
  check_twistword(w);
  TwistWord out = identity_word(w.genus, w.curves);
  for (const TwistFactor& f : w.factors) {
    if (std::holds_alternative<TorusTwist>(f)) {
      out.factors.push_back(f);
    } else {
      const auto& s = std::get<SphereTwist>(f);
      long long k = ((s.exponent % 2) + 2) % 2;
      if (k == 1) out.factors.push_back(SphereTwist{s.two_handle, 1});
    }
  }
  return out;
}

TwistWord spun_lens_twistword(long long p, long long q) {
  if (p < 1) throw DomainError("lens parameter p must be positive");
  if (q < 1) throw DomainError("lens parameter q must be positive");
  if (std::gcd(p, q) != 1) throw DomainError("lens parameters not coprime");
  TwistWord w = identity_word(1, 1);
  for (long long i = 0; i < p; ++i) w.factors.push_back(TorusTwist{1, 1});
  w.factors.push_back(SphereTwist{1, q});
  return w;
}

}  // namespace ob
