#include "obkirby/heegaard.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

#include "obkirby/errors.hpp"

namespace ob {

Event Event::pass(int handle, int sign) {
  Event e;
  e.kind = EventKind::Pass;
  e.handle = handle;
  e.sign = sign;
  return e;
}

Event Event::kink(int sign) {
  Event e;
  e.kind = EventKind::Kink;
  e.sign = sign;
  return e;
}

Event Event::cross(std::string other, CrossRole role, int sign, long long id) {
  Event e;
  e.kind = EventKind::Cross;
  e.other = std::move(other);
  e.role = role;
  e.sign = sign;
  e.crossing_id = id;
  return e;
}

bool equivalent(const AttachingCurve& x, const AttachingCurve& y) {
  const std::size_t n = x.events.size();
  if (n != y.events.size()) return false;
  if (n == 0) return true;
  for (std::size_t r = 0; r < n; ++r) {
    bool ok = true;
    for (std::size_t i = 0; i < n && ok; ++i)
      if (x.events[(i + r) % n] != y.events[i]) ok = false;
    if (ok) return true;
  }
  return false;
}

long long writhe(const AttachingCurve& c) {
  long long w = 0;
  for (const Event& e : c.events)
    if (e.kind == EventKind::Kink) w += e.sign;
  return w;
}

std::vector<std::string> default_handle_labels(int genus) {
  std::vector<std::string> labels;
  labels.reserve(static_cast<std::size_t>(genus));
  for (int i = 1; i <= genus; ++i) labels.push_back("h" + std::to_string(i));
  return labels;
}

std::string to_string(const Violation& v) {
  std::string s;
  if (!v.curve.empty()) {
    s += "curve '" + v.curve + "'";
    if (v.event_index >= 0) s += ", event " + std::to_string(v.event_index);
    s += ": ";
  }
  s += v.message;
  return s;
}

std::vector<Violation> validate(const HeegaardDiagram& hd) {
  std::vector<Violation> out;
  if (hd.genus < 0) out.push_back({"", -1, "negative genus"});

  std::set<std::string> seen;
  for (const AttachingCurve& c : hd.curves) {
    if (!seen.insert(c.name).second)
      out.push_back({c.name, -1, "duplicate curve name"});
  }

  struct Strand {
    const AttachingCurve* curve;
    int index;
    const Event* event;
  };
  std::map<long long, std::vector<Strand>> crossings;

  for (const AttachingCurve& c : hd.curves) {
    for (int i = 0; i < static_cast<int>(c.events.size()); ++i) {
      const Event& e = c.events[i];
      if (e.sign != 1 && e.sign != -1)
        out.push_back({c.name, i, "sign must be +1 or -1"});
      switch (e.kind) {
        case EventKind::Pass:
          if (e.handle < 1 || e.handle > hd.genus)
            out.push_back({c.name, i, "handle index out of range"});
          break;
        case EventKind::Kink:
          break;
        case EventKind::Cross: {
          if (e.other == c.name)
            out.push_back({c.name, i, "crossing references its own curve"});
          bool known = std::any_of(hd.curves.begin(), hd.curves.end(),
                                   [&](const AttachingCurve& o) { return o.name == e.other; });
          if (!known)
            out.push_back({c.name, i, "crossing references unknown curve '" + e.other + "'"});
          crossings[e.crossing_id].push_back({&c, i, &e});
          break;
        }
      }
    }
  }

  for (const auto& [id, strands] : crossings) {
    const std::string ids = std::to_string(id);
    if (strands.size() == 1) {
      out.push_back({strands[0].curve->name, strands[0].index,
                     "unpaired crossing " + ids});
      continue;
    }
    if (strands.size() > 2) {
      out.push_back({strands[0].curve->name, strands[0].index,
                     "crossing " + ids + " appears " + std::to_string(strands.size()) +
                         " times (expected exactly 2)"});
      continue;
    }
    const Strand& a = strands[0];
    const Strand& b = strands[1];
    if (a.curve == b.curve) {
      out.push_back({a.curve->name, a.index,
                     "crossing " + ids + " pairs two events on the same curve"});
      continue;
    }
    if (a.event->other != b.curve->name || b.event->other != a.curve->name)
      out.push_back({a.curve->name, a.index,
                     "crossing " + ids + " partner names do not match"});
    if (a.event->role == b.event->role)
      out.push_back({a.curve->name, a.index,
                     "crossing " + ids + " must pair an over strand with an under strand"});
    if (a.event->sign != b.event->sign)
      out.push_back({a.curve->name, a.index,
                     "crossing " + ids + " signs disagree"});
  }

  // Distinct crossings between each pair of curves must come in even number,
  // so linking numbers are integers.
  std::map<std::pair<const AttachingCurve*, const AttachingCurve*>, int> pair_count;
  for (const auto& [id, strands] : crossings) {
    if (strands.size() != 2 || strands[0].curve == strands[1].curve) continue;
    auto key = std::minmax(strands[0].curve, strands[1].curve);
    pair_count[{key.first, key.second}] += 1;
  }
  for (const auto& [key, count] : pair_count)
    if (count % 2 != 0)
      out.push_back({key.first->name, -1,
                     "odd number of crossings (" + std::to_string(count) + ") with curve '" +
                         key.second->name + "'"});

  return out;
}

void require_valid(const HeegaardDiagram& hd) {
  std::vector<Violation> v = validate(hd);
  if (v.empty()) return;
  std::string msg = "invalid Heegaard diagram: " + to_string(v[0]);
  if (v.size() > 1)
    msg += " (+" + std::to_string(v.size() - 1) + " more)";
  throw DomainError(msg);
}

HeegaardDiagram canonical_page(int genus, int curves) {
  if (genus < 0 || curves < 0) throw DomainError("negative genus or curve count");
  HeegaardDiagram hd;
  hd.genus = genus;
  hd.handle_labels = default_handle_labels(genus);
  for (int i = 1; i <= curves; ++i)
    hd.curves.push_back({"a" + std::to_string(i), {}});
  return hd;
}

bool is_canonical_page(const HeegaardDiagram& hd) {
  return std::all_of(hd.curves.begin(), hd.curves.end(),
                     [](const AttachingCurve& c) { return c.events.empty(); });
}

HeegaardDiagram lens_diagram(long long p, long long q) {
  if (p < 1) throw DomainError("lens parameter p must be positive");
  if (q < 1) throw DomainError("lens parameter q must be positive");
  if (std::gcd(p, q) != 1) throw DomainError("lens parameters not coprime");
  HeegaardDiagram hd = canonical_page(1, 1);
  AttachingCurve& c = hd.curves[0];
  for (long long i = 0; i < p; ++i) c.events.push_back(Event::pass(1, 1));
  for (long long i = 0; i < q; ++i) c.events.push_back(Event::kink(1));
  return hd;
}

int euler_char_page(const HeegaardDiagram& hd) {
  return 1 - hd.genus + hd.curve_count();
}

// ---------------------------------------------------------------------------
// Text format

namespace {

std::vector<std::string> tokenize(std::string_view line) {
  std::string padded;
  padded.reserve(line.size());
  for (char ch : line) {
    if (ch == '#') break;
    if (ch == ';' || ch == ':') {
      padded += ' ';
      padded += ch;
      padded += ' ';
    } else {
      padded += ch;
    }
  }
  std::vector<std::string> toks;
  std::istringstream is(padded);
  std::string t;
  while (is >> t) toks.push_back(t);
  return toks;
}

[[noreturn]] void fail(int line, const std::string& msg) {
  throw ParseError("line " + std::to_string(line) + ": " + msg);
}

long long parse_int(const std::string& tok, int line) {
  long long v = 0;
  auto [p, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
  if (ec != std::errc() || p != tok.data() + tok.size())
    fail(line, "expected an integer, got '" + tok + "'");
  return v;
}

int parse_sign(const std::string& tok, int line) {
  if (tok == "+") return 1;
  if (tok == "-") return -1;
  fail(line, "expected '+' or '-', got '" + tok + "'");
}

bool valid_name(const std::string& s) {
  if (s.empty()) return false;
  for (char ch : s)
    if (ch == ';' || ch == ':' || ch == '#' || std::isspace(static_cast<unsigned char>(ch)))
      return false;
  return true;
}

}  // namespace

HeegaardDiagram parse_hd(std::string_view text) {
  HeegaardDiagram hd;
  bool have_page = false;
  int lineno = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t eol = text.find('\n', pos);
    std::string_view line = text.substr(pos, eol == std::string_view::npos ? std::string_view::npos
                                                                           : eol - pos);
    pos = eol == std::string_view::npos ? text.size() + 1 : eol + 1;
    ++lineno;
    std::vector<std::string> toks = tokenize(line);
    if (toks.empty()) continue;

    if (toks[0] == "page") {
      if (have_page) fail(lineno, "duplicate page line");
      if (toks.size() != 2 || toks[1].rfind("g=", 0) != 0)
        fail(lineno, "expected 'page g=<genus>'");
      long long g = parse_int(toks[1].substr(2), lineno);
      if (g < 0) fail(lineno, "genus must be non-negative");
      if (g > 1000000) fail(lineno, "genus too large");
      hd.genus = static_cast<int>(g);
      have_page = true;
      continue;
    }

    if (toks[0] == "curve") {
      if (!have_page) fail(lineno, "curve before page line");
      if (toks.size() < 3 || toks[2] != ":")
        fail(lineno, "expected 'curve <name> : <events>'");
      if (!valid_name(toks[1])) fail(lineno, "invalid curve name '" + toks[1] + "'");
      AttachingCurve c;
      c.name = toks[1];
      std::size_t i = 3;
      bool expect_event = toks.size() > 3;
      while (expect_event) {
        if (i >= toks.size()) fail(lineno, "expected an event after ';'");
        const std::string& kw = toks[i];
        if (kw == "pass") {
          if (i + 2 >= toks.size()) fail(lineno, "pass needs a handle index and a sign");
          long long h = parse_int(toks[i + 1], lineno);
          int s = parse_sign(toks[i + 2], lineno);
          if (h < 1 || h > 1000000) fail(lineno, "handle index out of range");
          c.events.push_back(Event::pass(static_cast<int>(h), s));
          i += 3;
        } else if (kw == "kink") {
          if (i + 1 >= toks.size()) fail(lineno, "kink needs a sign");
          c.events.push_back(Event::kink(parse_sign(toks[i + 1], lineno)));
          i += 2;
        } else if (kw == "cross") {
          if (i + 4 >= toks.size())
            fail(lineno, "cross needs a curve name, over|under, a sign and an id");
          const std::string& other = toks[i + 1];
          if (!valid_name(other)) fail(lineno, "invalid curve name '" + other + "'");
          CrossRole role;
          if (toks[i + 2] == "over")
            role = CrossRole::Over;
          else if (toks[i + 2] == "under")
            role = CrossRole::Under;
          else
            fail(lineno, "expected 'over' or 'under', got '" + toks[i + 2] + "'");
          int s = parse_sign(toks[i + 3], lineno);
          long long id = parse_int(toks[i + 4], lineno);
          c.events.push_back(Event::cross(other, role, s, id));
          i += 5;
        } else {
          fail(lineno, "unknown event '" + kw + "'");
        }
        if (i == toks.size()) break;
        if (toks[i] != ";") fail(lineno, "expected ';' between events, got '" + toks[i] + "'");
        ++i;
      }
      hd.curves.push_back(std::move(c));
      continue;
    }

    fail(lineno, "expected 'page' or 'curve', got '" + toks[0] + "'");
  }
  if (!have_page) throw ParseError("line 1: missing 'page g=<genus>' line");
  hd.handle_labels = default_handle_labels(hd.genus);
  return hd;
}

std::string serialize_hd(const HeegaardDiagram& hd) {
  std::string out = "page g=" + std::to_string(hd.genus) + "\n";
  for (const AttachingCurve& c : hd.curves) {
    out += "curve " + c.name + " :";
    bool first = true;
    for (const Event& e : c.events) {
      out += first ? " " : " ; ";
      first = false;
      switch (e.kind) {
        case EventKind::Pass:
          out += "pass " + std::to_string(e.handle) + (e.sign > 0 ? " +" : " -");
          break;
        case EventKind::Kink:
          out += e.sign > 0 ? "kink +" : "kink -";
          break;
        case EventKind::Cross:
          out += "cross " + e.other + (e.role == CrossRole::Over ? " over" : " under") +
                 (e.sign > 0 ? " + " : " - ") + std::to_string(e.crossing_id);
          break;
      }
    }
    out += "\n";
  }
  return out;
}

}  // namespace ob
