#include "obkirby/kirby.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "json.hpp"
#include "obkirby/errors.hpp"

namespace ob {

BallWord free_reduce(BallWord w) {
  BallWord out;
  out.reserve(w.size());
  for (const BallPass& x : w) {
    if (!out.empty() && out.back().ball == x.ball && out.back().sign == -x.sign)
      out.pop_back();
    else
      out.push_back(x);
  }
  return out;
}

BallWord inverse_word(const BallWord& w) {
  BallWord out;
  out.reserve(w.size());
  for (auto it = w.rbegin(); it != w.rend(); ++it) out.push_back({it->ball, -it->sign});
  return out;
}

std::string to_string(const BallWord& w) {
  if (w.empty()) return "1";
  std::string out;
  std::size_t i = 0;
  while (i < w.size()) {
    std::size_t j = i;
    long long exp = 0;
    while (j < w.size() && w[j].ball == w[i].ball && w[j].sign == w[i].sign) {
      exp += w[j].sign;
      ++j;
    }
    if (!out.empty()) out += ' ';
    out += "x" + std::to_string(w[i].ball);
    if (exp != 1) out += "^" + std::to_string(exp);
    i = j;
  }
  return out;
}

bool same_shadow(const KirbyDiagram& x, const KirbyDiagram& y) {
  return x.balls == y.balls && x.components == y.components && x.linking == y.linking &&
         x.three_handles == y.three_handles && x.four_handles == y.four_handles;
}

void check_well_formed(const KirbyDiagram& kd) {
  if (kd.balls < 0) throw DomainError("negative ball count");
  if (kd.three_handles < 0) throw DomainError("negative 3-handle count");
  if (kd.four_handles != 0 && kd.four_handles != 1)
    throw DomainError("4-handle count must be 0 or 1");
  const int m = kd.component_count();
  if (kd.linking.rows != m || kd.linking.cols != m)
    throw DomainError("linking matrix size does not match component count");
  if (!is_symmetric(kd.linking)) throw DomainError("linking matrix is not symmetric");
  std::set<std::string> names;
  for (int i = 0; i < m; ++i) {
    const FramedComponent& c = kd.components[i];
    if (c.name.empty()) throw DomainError("component with empty name");
    if (!names.insert(c.name).second)
      throw DomainError("duplicate component name '" + c.name + "'");
    if (kd.linking(i, i) != c.framing)
      throw DomainError("linking diagonal does not match framing of '" + c.name + "'");
    for (const BallPass& x : c.word) {
      if (x.ball < 1 || x.ball > kd.balls)
        throw DomainError("word of '" + c.name + "' runs through a ball out of range");
      if (x.sign != 1 && x.sign != -1)
        throw DomainError("word of '" + c.name + "' has a sign other than +1/-1");
    }
  }
}

long long page_framing(const AttachingCurve& c) { return writhe(c); }

long long page_linking(const AttachingCurve& x, const AttachingCurve& y) {
  // Half the signed count of distinct crossings between the two curves.
  // validate() guarantees the count is even and both strands carry one sign.
  std::set<long long> seen;
  long long sum = 0;
  for (const Event& e : x.events)
    if (e.kind == EventKind::Cross && e.other == y.name && seen.insert(e.crossing_id).second)
      sum += e.sign;
  return sum / 2;
}

namespace {

BallWord pass_subword(const AttachingCurve& c) {
  BallWord w;
  for (const Event& e : c.events)
    if (e.kind == EventKind::Pass) w.push_back({e.handle, e.sign});
  return free_reduce(std::move(w));
}

}  // namespace

KirbyDiagram half_open_book(const HeegaardDiagram& hd) {
  require_valid(hd);
  const int n = hd.curve_count();
  KirbyDiagram kd;
  kd.balls = hd.genus;
  kd.linking = IntMat(n, n);
  for (int i = 0; i < n; ++i) {
    const AttachingCurve& c = hd.curves[i];
    FramedComponent comp;
    comp.name = c.name;
    comp.word = pass_subword(c);
    comp.framing = page_framing(c);
    comp.role = ComponentRole::Page;
    kd.linking(i, i) = comp.framing;
    kd.components.push_back(std::move(comp));
  }
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      kd.linking(i, j) = kd.linking(j, i) = page_linking(hd.curves[i], hd.curves[j]);
  kd.three_handles = 0;
  kd.four_handles = 0;
  kd.provenance = Provenance{serialize_hd(hd), ""};
  return kd;
}

KirbyDiagram open_book(const HeegaardDiagram& hd, const std::vector<CocoreImage>& images) {
  KirbyDiagram kd = half_open_book(hd);
  const int n = hd.curve_count();
  if (static_cast<int>(images.size()) != n)
    throw DomainError("cocore image table size does not match curve count");

  IntMat link(2 * n, 2 * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) link(i, j) = kd.linking(i, j);

  for (int j = 0; j < n; ++j) {
    const CocoreImage& img = images[j];
    FramedComponent dual;
    dual.name = hd.curves[j].name + "*";
    BallWord w;
    for (auto [handle, sign] : img.pass_word) {
      if (handle < 1 || handle > hd.genus)
        throw DomainError("cocore image of curve " + std::to_string(j + 1) +
                          " passes a 1-handle out of range");
      if (sign != 1 && sign != -1)
        throw DomainError("cocore image of curve " + std::to_string(j + 1) +
                          " has a sign other than +1/-1");
      w.push_back({handle, sign});
    }
    dual.word = free_reduce(std::move(w));
    dual.framing = img.framing_offset;
    dual.role = ComponentRole::Dual;
    link(n + j, n + j) = dual.framing;
    link(j, n + j) = link(n + j, j) = 1;  // dual meridian links its curve once
    kd.components.push_back(std::move(dual));
  }
  kd.linking = std::move(link);
  kd.three_handles = hd.genus;
  kd.four_handles = 1;
  kd.provenance = Provenance{serialize_hd(hd), "(explicit images)"};
  return kd;
}

KirbyDiagram open_book_identity(const HeegaardDiagram& hd) {
  KirbyDiagram kd = open_book(hd, std::vector<CocoreImage>(hd.curves.size()));
  kd.provenance = Provenance{serialize_hd(hd), ""};
  return kd;
}

KirbyDiagram open_book(const HeegaardDiagram& hd, const TwistWord& mono) {
  check_twistword(mono);
  if (mono.is_identity()) {
    require_valid(hd);
    if (mono.genus != hd.genus || mono.curves != hd.curve_count())
      throw DomainError("context mismatch: twist word is on H_{" + std::to_string(mono.genus) +
                        "," + std::to_string(mono.curves) + "}, page has (g,n)=(" +
                        std::to_string(hd.genus) + "," + std::to_string(hd.curve_count()) + ")");
    return open_book_identity(hd);
  }
  if (!is_canonical_page(hd))
    throw DomainError(
        "context mismatch: twist words act on eventless pages; "
        "supply explicit cocore images for this diagram");
  if (mono.genus != hd.genus || mono.curves != hd.curve_count())
    throw DomainError("context mismatch: twist word is on H_{" + std::to_string(mono.genus) +
                      "," + std::to_string(mono.curves) + "}, page has (g,n)=(" +
                      std::to_string(hd.genus) + "," + std::to_string(hd.curve_count()) + ")");
  KirbyDiagram kd = open_book(hd, cocore_images(mono));
  kd.provenance = Provenance{serialize_hd(hd), serialize_twistword(mono)};
  return kd;
}

long long euler_characteristic(const KirbyDiagram& kd) {
  return 1LL - kd.balls + kd.component_count() - kd.three_handles + kd.four_handles;
}

Stabilized stabilize(const HeegaardDiagram& hd, const TwistWord& mono) {
  require_valid(hd);
  check_twistword(mono);
  const int n = hd.curve_count();
  if (mono.genus != hd.genus || mono.curves != n)
    throw DomainError("context mismatch: twist word context does not match the page");

  Stabilized out;
  out.page = hd;
  out.page.genus += 1;
  out.page.handle_labels.push_back("h" + std::to_string(out.page.genus));

  std::set<std::string> names;
  for (const AttachingCurve& c : hd.curves) names.insert(c.name);
  int k = n + 1;
  while (names.count("a" + std::to_string(k))) ++k;
  out.page.curves.push_back({"a" + std::to_string(k), {}});

  out.monodromy = mono;
  out.monodromy.genus = out.page.genus;
  out.monodromy.curves = n + 1;
  out.monodromy.factors.push_back(TorusTwist{n + 1, out.page.genus});
  return out;
}

// ---------------------------------------------------------------------------
// JSON format

using ordered_json = nlohmann::ordered_json;

std::string serialize_kd(const KirbyDiagram& kd) {
  ordered_json j;
  j["balls"] = kd.balls;
  j["components"] = ordered_json::array();
  for (const FramedComponent& c : kd.components) {
    ordered_json jc;
    jc["name"] = c.name;
    ordered_json word = ordered_json::array();
    for (const BallPass& x : c.word) word.push_back({x.ball, x.sign});
    jc["word"] = std::move(word);
    jc["framing"] = c.framing;
    jc["role"] = c.role == ComponentRole::Page ? "page" : "dual";
    j["components"].push_back(std::move(jc));
  }
  ordered_json link = ordered_json::array();
  for (int r = 0; r < kd.linking.rows; ++r) {
    ordered_json row = ordered_json::array();
    for (int c = 0; c < kd.linking.cols; ++c) row.push_back(kd.linking(r, c));
    link.push_back(std::move(row));
  }
  j["linking"] = std::move(link);
  j["three_handles"] = kd.three_handles;
  j["four_handles"] = kd.four_handles;
  if (kd.provenance) {
    j["provenance"] = {{"page", kd.provenance->page}, {"monodromy", kd.provenance->monodromy}};
  } else {
    j["provenance"] = nullptr;
  }
  return j.dump(2) + "\n";
}

namespace {

[[noreturn]] void schema_error(const std::string& what) {
  throw ParseError("kd: " + what);
}

long long get_int(const ordered_json& j, const char* key) {
  if (!j.contains(key) || !j[key].is_number_integer())
    schema_error(std::string("'") + key + "' must be an integer");
  return j[key].get<long long>();
}

}  // namespace

KirbyDiagram parse_kd(std::string_view json_text) {
  ordered_json j;
  try {
    j = ordered_json::parse(json_text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("kd: ") + e.what());
  }
  if (!j.is_object()) schema_error("top-level value must be an object");

  KirbyDiagram kd;
  long long balls = get_int(j, "balls");
  if (balls < 0 || balls > 1000000) schema_error("'balls' out of range");
  kd.balls = static_cast<int>(balls);

  if (!j.contains("components") || !j["components"].is_array())
    schema_error("'components' must be an array");
  for (const ordered_json& jc : j["components"]) {
    if (!jc.is_object()) schema_error("component must be an object");
    FramedComponent c;
    if (!jc.contains("name") || !jc["name"].is_string())
      schema_error("component 'name' must be a string");
    c.name = jc["name"].get<std::string>();
    if (!jc.contains("word") || !jc["word"].is_array())
      schema_error("component 'word' must be an array");
    BallWord w;
    for (const ordered_json& jl : jc["word"]) {
      if (!jl.is_array() || jl.size() != 2 || !jl[0].is_number_integer() ||
          !jl[1].is_number_integer())
        schema_error("word letter must be a [ball, sign] integer pair");
      w.push_back({jl[0].get<int>(), jl[1].get<int>()});
    }
    c.word = free_reduce(std::move(w));
    c.framing = get_int(jc, "framing");
    if (!jc.contains("role") || !jc["role"].is_string())
      schema_error("component 'role' must be a string");
    std::string role = jc["role"].get<std::string>();
    if (role == "page")
      c.role = ComponentRole::Page;
    else if (role == "dual")
      c.role = ComponentRole::Dual;
    else
      schema_error("component 'role' must be \"page\" or \"dual\"");
    kd.components.push_back(std::move(c));
  }

  const int m = kd.component_count();
  if (!j.contains("linking") || !j["linking"].is_array() ||
      static_cast<int>(j["linking"].size()) != m)
    schema_error("'linking' must be a " + std::to_string(m) + "-row matrix");
  kd.linking = IntMat(m, m);
  for (int r = 0; r < m; ++r) {
    const ordered_json& row = j["linking"][r];
    if (!row.is_array() || static_cast<int>(row.size()) != m)
      schema_error("'linking' rows must have " + std::to_string(m) + " entries");
    for (int c = 0; c < m; ++c) {
      if (!row[c].is_number_integer()) schema_error("'linking' entries must be integers");
      kd.linking(r, c) = row[c].get<long long>();
    }
  }

  long long three = get_int(j, "three_handles");
  long long four = get_int(j, "four_handles");
  if (three < 0 || three > 1000000) schema_error("'three_handles' out of range");
  if (four < 0 || four > 1) schema_error("'four_handles' must be 0 or 1");
  kd.three_handles = static_cast<int>(three);
  kd.four_handles = static_cast<int>(four);

  if (j.contains("provenance") && !j["provenance"].is_null()) {
    const ordered_json& jp = j["provenance"];
    if (!jp.is_object() || !jp.contains("page") || !jp["page"].is_string() ||
        !jp.contains("monodromy") || !jp["monodromy"].is_string())
      schema_error("'provenance' must be null or {page, monodromy} strings");
    kd.provenance = Provenance{jp["page"].get<std::string>(), jp["monodromy"].get<std::string>()};
  }

  check_well_formed(kd);
  return kd;
}

}  // namespace ob
