#include "obkirby/cli.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <future>
#include <istream>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "obkirby/errors.hpp"
#include "obkirby/heegaard.hpp"
#include "obkirby/invariants.hpp"
#include "obkirby/kirby.hpp"
#include "obkirby/monodromy.hpp"
#include "obkirby/moves.hpp"
#include "obkirby/reduce.hpp"
#include "obkirby/render.hpp"

namespace ob {

namespace {

using ordered_json = nlohmann::ordered_json;

std::string read_input(const std::string& path, std::istream& in) {
  if (path == "-") {
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
  }
  std::ifstream f(path, std::ios::binary);
  if (!f) throw DomainError("cannot open file '" + path + "'");
  std::ostringstream os;
  os << f.rdbuf();
  return os.str();
}

enum class InputKind { Page, Kirby };

InputKind detect(const std::string& text) {
  for (char ch : text) {
    if (std::isspace(static_cast<unsigned char>(ch))) continue;
    return ch == '{' ? InputKind::Kirby : InputKind::Page;
  }
  return InputKind::Page;
}

HeegaardDiagram load_hd(const std::string& text) {
  HeegaardDiagram hd = parse_hd(text);
  require_valid(hd);
  return hd;
}

HeegaardDiagram expect_hd(const std::string& text, const std::string& what) {
  if (detect(text) == InputKind::Kirby)
    throw DomainError(what + " expects a page diagram, got a Kirby diagram");
  return load_hd(text);
}

KirbyDiagram expect_kd(const std::string& text, const std::string& what) {
  if (detect(text) == InputKind::Page)
    throw DomainError(what +
                      " expects a Kirby diagram; pipe the page through 'hob', 'double' or 'ob' "
                      "first");
  return parse_kd(text);
}

void write_output(const std::string& payload, const std::string& out_path, std::ostream& out) {
  if (out_path.empty() || out_path == "-") {
    out << payload;
    return;
  }
  std::ofstream f(out_path, std::ios::binary);
  if (!f) throw DomainError("cannot open file '" + out_path + "' for writing");
  f << payload;
}

ordered_json group_json(const AbelianGroup& g) {
  ordered_json j;
  j["rank"] = g.rank;
  j["torsion"] = g.torsion;
  return j;
}

ordered_json form_json(const FormSummary& f) {
  ordered_json j;
  j["parity"] = f.even ? "even" : "odd";
  j["determinant"] = f.determinant;
  j["signature"] = f.signature;
  return j;
}

ordered_json bundle_json(const InvariantBundle& b) {
  ordered_json j;
  j["euler"] = b.euler;
  j["pi1_abelianized"] = group_json(b.pi1_abelianized);
  ordered_json hs = ordered_json::array();
  for (const AbelianGroup& g : b.homology.h) hs.push_back(group_json(g));
  j["H"] = std::move(hs);
  j["form"] = b.form ? form_json(*b.form) : ordered_json(nullptr);
  return j;
}

std::string invariants_json(const KirbyDiagram& kd) {
  InvariantBundle b = invariant_bundle(kd);
  GroupPresentation p = fundamental_group(kd);
  ordered_json j;
  j["euler"] = b.euler;
  ordered_json gens = ordered_json::array();
  for (int i = 1; i <= p.generators; ++i) gens.push_back("x" + std::to_string(i));
  ordered_json rels = ordered_json::array();
  for (const BallWord& w : p.relators) rels.push_back(to_string(w));
  j["pi1"] = {{"generators", std::move(gens)}, {"relators", std::move(rels)}};
  ordered_json hs = ordered_json::array();
  for (const AbelianGroup& g : b.homology.h) hs.push_back(group_json(g));
  j["H"] = std::move(hs);
  j["form"] = b.form ? form_json(*b.form) : ordered_json(nullptr);
  return j.dump(2) + "\n";
}

std::string invariants_text(const KirbyDiagram& kd) {
  InvariantBundle b = invariant_bundle(kd);
  GroupPresentation p = fundamental_group(kd);
  std::string s;
  s += "euler " + std::to_string(b.euler) + "\n";
  s += "pi1 <";
  for (int i = 1; i <= p.generators; ++i) s += (i > 1 ? " " : "") + ("x" + std::to_string(i));
  s += " |";
  for (std::size_t i = 0; i < p.relators.size(); ++i)
    s += (i ? ", " : " ") + to_string(p.relators[i]);
  s += ">\n";
  for (int i = 0; i < 5; ++i)
    s += "H" + std::to_string(i) + " " + to_string(b.homology.h[static_cast<std::size_t>(i)]) +
         "\n";
  if (b.form)
    s += std::string("form ") + (b.form->even ? "even" : "odd") + " determinant " +
         std::to_string(b.form->determinant) + " signature " + std::to_string(b.form->signature) +
         "\n";
  else
    s += "form undefined\n";
  return s;
}

std::string reduce_text(const HeegaardDiagram& hd, bool verify) {
  if (!verify) {
    Reduction r = reduce(hd);
    return "page g=" + std::to_string(r.genus) + " n=" + std::to_string(r.curves) +
           "\nmonodromy " + serialize_twistword(r.word) + "\n";
  }
  ReduceReport rep = verify_reduce(hd);
  return "page g=" + std::to_string(rep.reduction.genus) +
         " n=" + std::to_string(rep.reduction.curves) + "\nmonodromy " +
         serialize_twistword(rep.reduction.word) + "\nverified " +
         (rep.verdict ? "true" : "false") + "\n";
}

std::string reduce_json(const HeegaardDiagram& hd, bool verify) {
  ordered_json j;
  if (!verify) {
    Reduction r = reduce(hd);
    j["genus"] = r.genus;
    j["curves"] = r.curves;
    j["monodromy"] = serialize_twistword(r.word);
    j["verified"] = nullptr;
  } else {
    ReduceReport rep = verify_reduce(hd);
    j["genus"] = rep.reduction.genus;
    j["curves"] = rep.reduction.curves;
    j["monodromy"] = serialize_twistword(rep.reduction.word);
    j["verified"] = rep.verdict;
    j["original"] = bundle_json(rep.original);
    j["reduced"] = bundle_json(rep.reduced);
  }
  return j.dump(2) + "\n";
}

// Runs one job per input, possibly in parallel; output is buffered and
// emitted in input order so --jobs never changes the bytes produced.
std::string map_inputs(const std::vector<std::string>& inputs, std::istream& in, int jobs,
                       const std::function<std::string(const std::string&)>& fn,
                       bool headers) {
  std::vector<std::string> texts;
  texts.reserve(inputs.size());
  for (const std::string& path : inputs) texts.push_back(read_input(path, in));

  std::vector<std::string> results(inputs.size());
  if (jobs > 1 && inputs.size() > 1) {
    std::vector<std::future<std::string>> futures;
    futures.reserve(inputs.size());
    for (std::size_t i = 0; i < inputs.size(); ++i)
      futures.push_back(std::async(std::launch::async, fn, texts[i]));
    for (std::size_t i = 0; i < inputs.size(); ++i) results[i] = futures[i].get();
  } else {
    for (std::size_t i = 0; i < inputs.size(); ++i) results[i] = fn(texts[i]);
  }

  std::string out;
  for (std::size_t i = 0; i < inputs.size(); ++i) {
    if (headers && inputs.size() > 1) out += "== " + inputs[i] + "\n";
    out += results[i];
  }
  return out;
}

std::string braid_report(const Braid& b, const std::string& format) {
  Permutation perm = braid_permutation(b);
  const bool knot = is_single_cycle(perm);
  Braid canonical;
  canonical.strands = b.strands;
  for (int k = 1; k < b.strands; ++k) canonical.word.push_back(k);

  std::optional<BraidEquivalence> eq;
  if (knot) eq = braids_equivalent(b, canonical);

  if (format == "json") {
    ordered_json j;
    j["strands"] = b.strands;
    j["word"] = serialize_braid(b);
    ordered_json imgs = ordered_json::array();
    for (int i = 0; i < perm.degree(); ++i) imgs.push_back(perm(i) + 1);
    j["permutation"] = std::move(imgs);
    j["knot_closure"] = knot;
    if (eq) {
      j["canonical"] = serialize_braid(canonical);
      ordered_json conj = ordered_json::array();
      for (auto [a, c] : eq->conjugations) conj.push_back({a, c});
      j["conjugations"] = std::move(conj);
      j["crossing_changes"] = eq->crossing_changes;
    } else {
      j["canonical"] = nullptr;
      j["conjugations"] = nullptr;
      j["crossing_changes"] = nullptr;
    }
    return j.dump(2) + "\n";
  }

  std::string s;
  s += "strands " + std::to_string(b.strands) + "\n";
  s += "permutation";
  for (int i = 0; i < perm.degree(); ++i) s += " " + std::to_string(perm(i) + 1);
  s += "\nknot_closure " + std::string(knot ? "true" : "false") + "\n";
  if (eq) {
    s += "canonical " + serialize_braid(canonical) + "\n";
    s += "conjugations";
    if (eq->conjugations.empty()) s += " (none)";
    for (auto [a, c] : eq->conjugations)
      s += " (" + std::to_string(a) + " " + std::to_string(c) + ")";
    s += "\ncrossing_changes " + std::string(eq->crossing_changes ? "true" : "false") + "\n";
  }
  return s;
}

std::string roundtrip_one(const std::string& text) {
  if (detect(text) == InputKind::Kirby) {
    KirbyDiagram kd = parse_kd(text);
    KirbyDiagram again = parse_kd(serialize_kd(kd));
    return kd == again ? "true\n" : "false\n";
  }
  HeegaardDiagram hd = load_hd(text);
  HeegaardDiagram again = load_hd(serialize_hd(hd));
  return hd == again ? "true\n" : "false\n";
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Kirby diagrams of 4-dimensional open books built from Heegaard pages"};
  app.require_subcommand(1);

  std::string out_path;
  app.add_option("--out", out_path, "Write output to a file instead of stdout")
      ->capture_default_str();

  // hob
  auto* hob_cmd = app.add_subcommand("hob", "Half open book of a page diagram (.hd -> .kd)");
  std::string hob_in = "-";
  hob_cmd->add_option("input", hob_in, "Page diagram file, or - for stdin");

  // double
  auto* double_cmd =
      app.add_subcommand("double", "Open book with trivial monodromy (.hd -> .kd)");
  std::string double_in = "-";
  double_cmd->add_option("input", double_in, "Page diagram file, or - for stdin");

  // ob
  auto* ob_cmd = app.add_subcommand("ob", "Open book with the given monodromy (.hd -> .kd)");
  std::string ob_in = "-";
  std::string ob_mono;
  ob_cmd->add_option("input", ob_in, "Page diagram file, or - for stdin");
  ob_cmd->add_option("--mono", ob_mono, "Twist word, e.g. \"t(1,1) t(1,1) s(1)\"");

  // invariants
  auto* inv_cmd = app.add_subcommand("invariants", "Invariants of closed diagrams (.kd)");
  std::vector<std::string> inv_in;
  std::string inv_format = "json";
  int inv_jobs = 1;
  inv_cmd->add_option("inputs", inv_in, "Kirby diagram files, or - for stdin");
  inv_cmd->add_option("--format", inv_format, "json or text")
      ->check(CLI::IsMember({"json", "text"}));
  inv_cmd->add_option("--jobs", inv_jobs, "Parallel workers for multiple inputs")
      ->check(CLI::PositiveNumber);

  // reduce
  auto* red_cmd = app.add_subcommand(
      "reduce", "Monodromy word of a trivial-monodromy open book on the eventless page (.hd)");
  std::vector<std::string> red_in;
  std::string red_format = "text";
  bool red_verify = false;
  int red_jobs = 1;
  red_cmd->add_option("inputs", red_in, "Page diagram files, or - for stdin");
  red_cmd->add_flag("--verify", red_verify, "Compare invariant bundles of both open books");
  red_cmd->add_option("--format", red_format, "json or text")
      ->check(CLI::IsMember({"json", "text"}));
  red_cmd->add_option("--jobs", red_jobs, "Parallel workers for multiple inputs")
      ->check(CLI::PositiveNumber);

  // lens
  auto* lens_cmd =
      app.add_subcommand("lens", "Punctured lens space page L(p,q) - D3 (.hd), or its spun .kd");
  long long lens_p = 0, lens_q = 0;
  bool lens_twisted = false;
  lens_cmd->add_option("p", lens_p, "Order of H1")->required();
  lens_cmd->add_option("q", lens_q, "Twisting parameter, coprime to p")->required();
  lens_cmd->add_flag("--twisted", lens_twisted,
                     "Emit the twisted spin (sphere-twist monodromy) as .kd");

  // braid-canon
  auto* braid_cmd = app.add_subcommand(
      "braid-canon", "Strand permutation and canonical alignment of a braid word");
  std::string braid_word;
  int braid_strands = 0;
  std::string braid_format = "text";
  braid_cmd->add_option("word", braid_word, "Braid word, e.g. \"s1 s2^-1\"")->required();
  braid_cmd->add_option("--strands", braid_strands, "Strand count (default: inferred)");
  braid_cmd->add_option("--format", braid_format, "json or text")
      ->check(CLI::IsMember({"json", "text"}));

  // moves apply
  auto* moves_cmd = app.add_subcommand("moves", "Kirby moves on a diagram");
  moves_cmd->require_subcommand(1);
  auto* apply_cmd = moves_cmd->add_subcommand("apply", "Apply a move script to a .kd");
  std::string script_path;
  std::string moves_in = "-";
  apply_cmd->add_option("script", script_path, "Move script file")->required();
  apply_cmd->add_option("input", moves_in, "Kirby diagram file, or - for stdin");

  // stabilize
  auto* stab_cmd = app.add_subcommand(
      "stabilize", "Add a cancelling 1-handle/curve pair to a page, extending the monodromy");
  std::string stab_in = "-";
  std::string stab_mono;
  std::string stab_format = "text";
  stab_cmd->add_option("input", stab_in, "Page diagram file, or - for stdin");
  stab_cmd->add_option("--mono", stab_mono, "Twist word on the input page");
  stab_cmd->add_option("--format", stab_format, "json or text")
      ->check(CLI::IsMember({"json", "text"}));

  // render
  auto* render_cmd = app.add_subcommand("render", "Deterministic SVG picture of a diagram");
  std::string render_in = "-";
  render_cmd->add_option("input", render_in, "Diagram file (.hd or .kd), or - for stdin");

  // roundtrip
  auto* rt_cmd =
      app.add_subcommand("roundtrip", "Check parse -> serialize -> parse structural equality");
  std::vector<std::string> rt_in;
  int rt_jobs = 1;
  rt_cmd->add_option("inputs", rt_in, "Diagram files, or - for stdin");
  rt_cmd->add_option("--jobs", rt_jobs, "Parallel workers for multiple inputs")
      ->check(CLI::PositiveNumber);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(std::move(reversed));
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }

  try {
    std::string payload;

    if (*hob_cmd) {
      payload = serialize_kd(half_open_book(expect_hd(read_input(hob_in, in), "hob")));
    } else if (*double_cmd) {
      payload = serialize_kd(open_book_identity(expect_hd(read_input(double_in, in), "double")));
    } else if (*ob_cmd) {
      HeegaardDiagram hd = expect_hd(read_input(ob_in, in), "ob");
      TwistWord w = parse_twistword(ob_mono, hd.genus, hd.curve_count());
      payload = serialize_kd(open_book(hd, w));
    } else if (*inv_cmd) {
      if (inv_in.empty()) inv_in.push_back("-");
      const bool json = inv_format == "json";
      payload = map_inputs(
          inv_in, in, inv_jobs,
          [&](const std::string& text) {
            KirbyDiagram kd = expect_kd(text, "invariants");
            return json ? invariants_json(kd) : invariants_text(kd);
          },
          !json);
    } else if (*red_cmd) {
      if (red_in.empty()) red_in.push_back("-");
      const bool json = red_format == "json";
      payload = map_inputs(
          red_in, in, red_jobs,
          [&](const std::string& text) {
            HeegaardDiagram hd = expect_hd(text, "reduce");
            return json ? reduce_json(hd, red_verify) : reduce_text(hd, red_verify);
          },
          !json);
    } else if (*lens_cmd) {
      if (lens_twisted) {
        HeegaardDiagram page = lens_diagram(lens_p, lens_q);
        std::vector<CocoreImage> images(1);
        images[0].framing_offset = 1;
        KirbyDiagram kd = open_book(page, images);
        kd.provenance = Provenance{serialize_hd(page), "s(1)"};
        payload = serialize_kd(kd);
      } else {
        payload = serialize_hd(lens_diagram(lens_p, lens_q));
      }
    } else if (*braid_cmd) {
      payload = braid_report(parse_braid(braid_word, braid_strands), braid_format);
    } else if (*moves_cmd) {
      KirbyDiagram kd = expect_kd(read_input(moves_in, in), "moves apply");
      std::string script = read_input(script_path, in);
      ScriptResult res = apply_move_script(kd, script);
      for (const MoveRecord& rec : res.log) err << "# " << rec.move << ": " << rec.note << "\n";
      payload = serialize_kd(res.kd);
    } else if (*stab_cmd) {
      HeegaardDiagram hd = expect_hd(read_input(stab_in, in), "stabilize");
      TwistWord w = parse_twistword(stab_mono, hd.genus, hd.curve_count());
      Stabilized st = stabilize(hd, w);
      if (stab_format == "json") {
        ordered_json j;
        j["page"] = serialize_hd(st.page);
        j["monodromy"] = serialize_twistword(st.monodromy);
        payload = j.dump(2) + "\n";
      } else {
        payload = "# monodromy " + serialize_twistword(st.monodromy) + "\n" +
                  serialize_hd(st.page);
      }
    } else if (*render_cmd) {
      std::string text = read_input(render_in, in);
      payload = detect(text) == InputKind::Kirby ? render_svg(parse_kd(text))
                                                 : render_svg(load_hd(text));
    } else if (*rt_cmd) {
      if (rt_in.empty()) rt_in.push_back("-");
      payload = map_inputs(rt_in, in, rt_jobs, roundtrip_one, rt_in.size() > 1);
    }

    write_output(payload, out_path, out);
    return 0;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace ob
