#include "obkirby/moves.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <sstream>

#include "obkirby/errors.hpp"

namespace ob {

namespace {

void log_move(MoveLog* log, std::string move, std::string note) {
  if (log) log->push_back({std::move(move), std::move(note)});
}

void check_component_index(const KirbyDiagram& kd, std::size_t i) {
  if (i >= kd.components.size())
    throw DomainError("component index out of range");
}

}  // namespace

KirbyDiagram slide(const KirbyDiagram& kd, std::size_t i, std::size_t j, int sign,
                   MoveLog* log) {
  check_component_index(kd, i);
  check_component_index(kd, j);
  if (i == j) throw DomainError("cannot slide a component over itself");
  if (sign != 1 && sign != -1) throw DomainError("slide sign must be +1 or -1");

  KirbyDiagram out = kd;
  FramedComponent& ci = out.components[i];
  const FramedComponent& cj = out.components[j];

  BallWord tail = sign > 0 ? cj.word : inverse_word(cj.word);
  ci.word.insert(ci.word.end(), tail.begin(), tail.end());
  ci.word = free_reduce(std::move(ci.word));

  const int ii = static_cast<int>(i);
  const int jj = static_cast<int>(j);
  const long long lk_ij = kd.linking(ii, jj);
  ci.framing = checked_add(ci.framing,
                           checked_add(cj.framing, checked_mul(2 * sign, lk_ij)));
  for (int k = 0; k < out.linking.rows; ++k) {
    if (k == ii) continue;
    long long v = checked_add(kd.linking(ii, k), checked_mul(sign, kd.linking(jj, k)));
    out.linking(ii, k) = v;
    out.linking(k, ii) = v;
  }
  out.linking(ii, ii) = ci.framing;

  log_move(log, "slide",
           "slid '" + kd.components[i].name + "' over '" + kd.components[j].name + "' (" +
               (sign > 0 ? "+" : "-") + ")");
  return out;
}

KirbyDiagram crossing_change(const KirbyDiagram& kd, std::size_t i, MoveLog* log) {
  check_component_index(kd, i);
  const int ii = static_cast<int>(i);
  for (std::size_t k = 0; k < kd.components.size(); ++k) {
    if (k == i) continue;
    const FramedComponent& c = kd.components[k];
    if (c.role == ComponentRole::Dual && c.word.empty() && c.framing == 0 &&
        kd.linking(ii, static_cast<int>(k)) == 1) {
      log_move(log, "crossing",
               "crossing change on '" + kd.components[i].name + "' absorbed by meridian '" +
                   c.name + "'");
      return kd;
    }
  }
  throw DomainError("no eligible meridian partner for '" + kd.components[i].name + "'");
}

KirbyDiagram cancel_12(const KirbyDiagram& kd, int ball, std::size_t i, MoveLog* log) {
  check_component_index(kd, i);
  if (ball < 1 || ball > kd.balls) throw DomainError("ball index out of range");

  const FramedComponent& ci = kd.components[i];
  int pos = -1;
  for (int k = 0; k < static_cast<int>(ci.word.size()); ++k) {
    if (ci.word[k].ball == ball) {
      if (pos >= 0)
        throw DomainError("component '" + ci.name + "' runs through ball " +
                          std::to_string(ball) + " more than once");
      pos = k;
    }
  }
  if (pos < 0)
    throw DomainError("component '" + ci.name + "' does not run through ball " +
                      std::to_string(ball));

  // Rotate the cyclic word to start just after the cancelled pass; the
  // relator x_ball^s * rest == 1 gives the replacement for x_ball.
  const int s0 = ci.word[pos].sign;
  BallWord rest(ci.word.begin() + pos + 1, ci.word.end());
  rest.insert(rest.end(), ci.word.begin(), ci.word.begin() + pos);
  BallWord replacement = s0 > 0 ? inverse_word(rest) : rest;

  KirbyDiagram out;
  out.balls = kd.balls - 1;
  out.three_handles = kd.three_handles;
  out.four_handles = kd.four_handles;
  out.provenance = kd.provenance;

  auto renumber = [ball](BallWord w) {
    for (BallPass& x : w)
      if (x.ball > ball) x.ball -= 1;
    return w;
  };

  int rerouted = 0;
  for (std::size_t k = 0; k < kd.components.size(); ++k) {
    if (k == i) continue;
    FramedComponent c = kd.components[k];
    BallWord w;
    bool touched = false;
    for (const BallPass& x : c.word) {
      if (x.ball == ball) {
        touched = true;
        const BallWord& sub = x.sign > 0 ? replacement : inverse_word(replacement);
        w.insert(w.end(), sub.begin(), sub.end());
      } else {
        w.push_back(x);
      }
    }
    if (touched) ++rerouted;
    c.word = free_reduce(renumber(std::move(w)));
    out.components.push_back(std::move(c));
  }

  out.linking = kd.linking.without(static_cast<int>(i), static_cast<int>(i));

  std::string note = "cancelled ball " + std::to_string(ball) + " against '" + ci.name + "'";
  if (rerouted > 0) note += ", rerouted " + std::to_string(rerouted) + " component(s)";
  log_move(log, "cancel12", note);
  check_well_formed(out);
  return out;
}

KirbyDiagram cancel_23(const KirbyDiagram& kd, std::size_t i, MoveLog* log) {
  check_component_index(kd, i);
  const FramedComponent& ci = kd.components[i];
  if (!ci.word.empty())
    throw DomainError("component '" + ci.name + "' still runs through a ball");
  if (ci.framing != 0)
    throw DomainError("component '" + ci.name + "' is not 0-framed");
  for (int k = 0; k < kd.linking.rows; ++k)
    if (k != static_cast<int>(i) && kd.linking(static_cast<int>(i), k) != 0)
      throw DomainError("component '" + ci.name + "' links another component");
  if (kd.three_handles < 1) throw DomainError("no 3-handle available to cancel against");

  KirbyDiagram out = kd;
  out.components.erase(out.components.begin() + static_cast<std::ptrdiff_t>(i));
  out.linking = kd.linking.without(static_cast<int>(i), static_cast<int>(i));
  out.three_handles -= 1;
  log_move(log, "cancel23", "cancelled '" + ci.name + "' against a 3-handle");
  return out;
}

ScriptResult apply_move_script(const KirbyDiagram& kd, std::string_view script) {
  ScriptResult res{kd, {}};
  int lineno = 0;
  std::size_t pos = 0;
  while (pos <= script.size()) {
    std::size_t eol = script.find('\n', pos);
    std::string line(script.substr(pos, eol == std::string_view::npos ? std::string_view::npos
                                                                      : eol - pos));
    pos = eol == std::string_view::npos ? script.size() + 1 : eol + 1;
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream is(line);
    std::vector<std::string> toks;
    std::string t;
    while (is >> t) toks.push_back(t);
    if (toks.empty()) continue;

    auto to_index = [&](const std::string& tok) -> long long {
      long long v = 0;
      auto [p, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
      if (ec != std::errc() || p != tok.data() + tok.size())
        throw ParseError("script line " + std::to_string(lineno) + ": expected an integer, got '" +
                         tok + "'");
      return v;
    };
    auto arity = [&](std::size_t want) {
      if (toks.size() != want + 1)
        throw ParseError("script line " + std::to_string(lineno) + ": '" + toks[0] + "' takes " +
                         std::to_string(want) + " argument(s)");
    };
    auto comp = [&](const std::string& tok) -> std::size_t {
      long long v = to_index(tok);
      if (v < 1 || v > res.kd.component_count())
        throw DomainError("script line " + std::to_string(lineno) +
                          ": component index out of range");
      return static_cast<std::size_t>(v - 1);
    };

    try {
      if (toks[0] == "slide") {
        arity(3);
        int sign = toks[3] == "+" ? 1 : toks[3] == "-" ? -1 : 0;
        if (sign == 0)
          throw ParseError("script line " + std::to_string(lineno) + ": expected '+' or '-'");
        res.kd = slide(res.kd, comp(toks[1]), comp(toks[2]), sign, &res.log);
      } else if (toks[0] == "crossing") {
        arity(1);
        res.kd = crossing_change(res.kd, comp(toks[1]), &res.log);
      } else if (toks[0] == "cancel12") {
        arity(2);
        long long ball = to_index(toks[1]);
        if (ball < 1 || ball > res.kd.balls)
          throw DomainError("script line " + std::to_string(lineno) + ": ball index out of range");
        res.kd = cancel_12(res.kd, static_cast<int>(ball), comp(toks[2]), &res.log);
      } else if (toks[0] == "cancel23") {
        arity(1);
        res.kd = cancel_23(res.kd, comp(toks[1]), &res.log);
      } else {
        throw ParseError("script line " + std::to_string(lineno) + ": unknown move '" + toks[0] +
                         "'");
      }
    } catch (const DomainError& e) {
      std::string what = e.what();
      if (what.rfind("script line", 0) == 0) throw;
      throw DomainError("script line " + std::to_string(lineno) + ": " + what);
    }
  }
  return res;
}

// ---------------------------------------------------------------------------
// Braids

Braid parse_braid(std::string_view text, int strands) {
  Braid b;
  std::istringstream is{std::string(text)};
  std::string tok;
  int max_gen = 0;
  while (is >> tok) {
    if (tok.size() < 2 || tok[0] != 's')
      throw ParseError("malformed braid letter '" + tok + "'");
    std::size_t caret = tok.find('^');
    std::string idx = tok.substr(1, caret == std::string::npos ? std::string::npos : caret - 1);
    long long k = 0;
    auto [p, ec] = std::from_chars(idx.data(), idx.data() + idx.size(), k);
    if (ec != std::errc() || p != idx.data() + idx.size() || k < 1)
      throw ParseError("malformed braid letter '" + tok + "'");
    int sign = 1;
    if (caret != std::string::npos) {
      if (tok.substr(caret) != "^-1")
        throw ParseError("malformed braid letter '" + tok + "' (only ^-1 is allowed)");
      sign = -1;
    }
    if (k > 1000000) throw ParseError("braid generator index too large");
    b.word.push_back(sign * static_cast<int>(k));
    max_gen = std::max(max_gen, static_cast<int>(k));
  }
  if (strands == 0) {
    if (b.word.empty())
      throw DomainError("cannot infer the strand count of an empty braid word");
    b.strands = max_gen + 1;
  } else {
    if (strands < 1) throw DomainError("strand count must be positive");
    if (max_gen > strands - 1)
      throw DomainError("braid generator index out of range for " + std::to_string(strands) +
                        " strands");
    b.strands = strands;
  }
  return b;
}

std::string serialize_braid(const Braid& b) {
  std::string out;
  for (int k : b.word) {
    if (!out.empty()) out += ' ';
    out += "s" + std::to_string(k > 0 ? k : -k);
    if (k < 0) out += "^-1";
  }
  return out;
}

Permutation Permutation::identity(int n) {
  Permutation p;
  p.img.resize(static_cast<std::size_t>(n));
  std::iota(p.img.begin(), p.img.end(), 0);
  return p;
}

Permutation compose(const Permutation& x, const Permutation& y) {
  if (x.degree() != y.degree()) throw DomainError("permutation degree mismatch");
  Permutation out;
  out.img.resize(x.img.size());
  for (std::size_t i = 0; i < x.img.size(); ++i)
    out.img[i] = y.img[static_cast<std::size_t>(x.img[i])];
  return out;
}

Permutation transposition(int n, int a, int b) {
  Permutation p = Permutation::identity(n);
  std::swap(p.img[static_cast<std::size_t>(a)], p.img[static_cast<std::size_t>(b)]);
  return p;
}

Permutation conjugate_by_transposition(const Permutation& p, int a, int b) {
  Permutation t = transposition(p.degree(), a, b);
  return compose(compose(t, p), t);
}

bool is_single_cycle(const Permutation& p) {
  const int n = p.degree();
  if (n == 0) return false;
  int x = 0;
  for (int len = 1; len < n; ++len) {
    x = p(x);
    if (x == 0) return false;
  }
  return p(x) == 0;
}

Permutation braid_permutation(const Braid& b) {
  Permutation p = Permutation::identity(b.strands);
  for (int k : b.word) {
    int g = k > 0 ? k : -k;
    if (g < 1 || g >= b.strands) throw DomainError("braid generator index out of range");
    p = compose(p, transposition(b.strands, g - 1, g));
  }
  return p;
}

bool closure_is_knot(const Braid& b) { return is_single_cycle(braid_permutation(b)); }

namespace {

// Cycle word of a p-cycle anchored at strand 0: [0, p(0), p(p(0)), ...].
std::vector<int> cycle_word(const Permutation& p) {
  std::vector<int> w;
  int x = 0;
  do {
    w.push_back(x);
    x = p(x);
  } while (x != 0);
  return w;
}

}  // namespace

BraidEquivalence braids_equivalent(const Braid& x, const Braid& y) {
  if (!closure_is_knot(x) || !closure_is_knot(y))
    throw DomainError("closure is not a knot");
  BraidEquivalence out;
  if (x.strands != y.strands) return out;  // distinct strand counts: inequivalent here

  Permutation cur = braid_permutation(x);
  const Permutation target = braid_permutation(y);
  std::vector<int> want = cycle_word(target);
  // Selection-style alignment: fix one cycle position at a time by swapping
  // the two strand labels that disagree. Never touches strand 0, so earlier
  // positions stay fixed; at most p-1 conjugations.
  for (std::size_t k = 1; k < want.size(); ++k) {
    std::vector<int> have = cycle_word(cur);
    if (have[k] == want[k]) continue;
    out.conjugations.emplace_back(have[k] + 1, want[k] + 1);
    cur = conjugate_by_transposition(cur, have[k], want[k]);
  }
  if (cycle_word(cur) != want)
    throw DomainError("internal error: conjugation alignment failed");
  out.equivalent = true;
  out.crossing_changes = !(x == y);
  return out;
}

}  // namespace ob
