#include "posmat/document.hpp"

#include <chrono>
#include <fstream>
#include <iostream>
#include <set>
#include <sstream>

#include "CLI11.hpp"
#include "posmat/constructors.hpp"
#include "posmat/random.hpp"

namespace posmat {

namespace {

std::string line_col(const std::string& text, std::size_t byte) {
  int line = 1, col = 1;
  for (std::size_t i = 0; i + 1 < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return std::to_string(line) + ":" + std::to_string(col);
}

const Json& field(const Json& j, const char* key, const std::string& where) {
  if (!j.contains(key)) throw InputError(where + ": missing field '" + key + "'");
  return j.at(key);
}

std::vector<std::string> string_list(const Json& j, const std::string& where) {
  if (!j.is_array()) throw InputError(where + ": expected an array of labels");
  std::vector<std::string> out;
  for (std::size_t i = 0; i < j.size(); ++i) {
    if (!j[i].is_string()) throw InputError(where + "[" + std::to_string(i) + "]: expected a string label");
    out.push_back(j[i].get<std::string>());
  }
  return out;
}

Mask mask_from(const Matroid& m, const Json& j, const std::string& where) {
  Mask x = 0;
  const auto labels = string_list(j, where);
  for (std::size_t i = 0; i < labels.size(); ++i) {
    const auto e = m.find(labels[i]);
    if (!e) throw InputError(where + "[" + std::to_string(i) + "]: unknown label '" + labels[i] + "'");
    x |= bit(*e);
  }
  return x;
}

int element_from(const Matroid& m, const Json& j, const std::string& where) {
  if (!j.is_string()) throw InputError(where + ": expected a label");
  const auto e = m.find(j.get<std::string>());
  if (!e) throw InputError(where + ": unknown label '" + j.get<std::string>() + "'");
  return *e;
}

void check_ground(const std::vector<std::string>& ground) {
  std::set<std::string> seen;
  for (const auto& l : ground) {
    if (l.empty()) throw InputError("ground: labels must be nonempty");
    if (l.find('#') != std::string::npos) throw InputError("ground: label '" + l + "' contains the reserved character '#'");
    if (!seen.insert(l).second) throw InputError("ground: duplicate label '" + l + "'");
  }
  if (ground.size() > static_cast<std::size_t>(kMaxElements)) {
    throw CapacityError("ground: " + std::to_string(ground.size()) + " elements; at most 16 are supported");
  }
}

}  // namespace

std::vector<std::string> split_labels(const std::string& csv) {
  std::vector<std::string> out;
  std::string cur;
  std::istringstream in(csv);
  while (std::getline(in, cur, ',')) out.push_back(cur);
  return out;
}

std::vector<int> split_ints(const std::string& csv) {
  std::vector<int> out;
  for (const auto& s : split_labels(csv)) {
    try {
      std::size_t used = 0;
      out.push_back(std::stoi(s, &used));
      if (used != s.size()) throw std::invalid_argument(s);
    } catch (const std::exception&) {
      throw InputError("expected an integer, got '" + s + "'");
    }
  }
  return out;
}

LinearOrder parse_order(const Matroid& m, const std::vector<std::string>& labels) {
  if (static_cast<int>(labels.size()) != m.size()) {
    throw InputError("order has " + std::to_string(labels.size()) + " labels; the ground set has " + std::to_string(m.size()));
  }
  std::vector<int> seq;
  Mask seen = 0;
  for (const auto& l : labels) {
    const auto e = m.find(l);
    if (!e) throw InputError("order: unknown label '" + l + "'");
    if (has(seen, *e)) throw InputError("order: label '" + l + "' repeated");
    seen |= bit(*e);
    seq.push_back(*e);
  }
  return LinearOrder::from_sequence(std::move(seq));
}

MatroidDocument document_from_json(const Json& j) {
  if (!j.is_object()) throw InputError("document: expected a JSON object");
  if (j.contains("version") && (!j["version"].is_number_integer() || j["version"].get<int>() != kFormatVersion)) {
    throw InputError("version: unsupported format version");
  }
  MatroidDocument doc;
  if (j.contains("name")) {
    if (!j["name"].is_string()) throw InputError("name: expected a string");
    doc.name = j["name"].get<std::string>();
  }
  int reps = 0;
  for (const char* k : {"bases", "cyclic_flats", "transversal", "family"}) reps += j.contains(k) ? 1 : 0;
  if (reps != 1) throw InputError("document: exactly one of bases, cyclic_flats, transversal, family is required");

  if (j.contains("family")) {
    const Json& f = j["family"];
    if (!f.is_object()) throw InputError("family: expected an object");
    const Json& id = field(f, "id", "family");
    if (!id.is_string()) throw InputError("family.id: expected a string");
    const Json& params = field(f, "params", "family");
    if (!params.is_array()) throw InputError("family.params: expected an array of integers");
    std::vector<int> p;
    for (const auto& v : params) {
      if (!v.is_number_integer()) throw InputError("family.params: expected integers");
      p.push_back(v.get<int>());
    }
    doc.matroid = generate(parse_family(id.get<std::string>()), p);
    if (f.contains("dual") && f["dual"].is_boolean() && f["dual"].get<bool>()) doc.matroid = dual(doc.matroid);
    if (j.contains("ground")) {
      auto g = string_list(j["ground"], "ground");
      auto have = doc.matroid.labels();
      std::sort(g.begin(), g.end());
      std::sort(have.begin(), have.end());
      if (g != have) throw InputError("ground: does not match the labels of the family member");
    }
  } else {
    const auto ground = string_list(field(j, "ground", "document"), "ground");
    check_ground(ground);
    const Matroid blank = uniform(0, ground);
    if (j.contains("bases")) {
      const Json& b = j["bases"];
      if (!b.is_array() || b.empty()) throw InputError("bases: expected a nonempty array");
      std::vector<Mask> bases;
      for (std::size_t i = 0; i < b.size(); ++i) bases.push_back(mask_from(blank, b[i], "bases[" + std::to_string(i) + "]"));
      doc.matroid = Matroid::from_bases(ground, bases);
    } else if (j.contains("cyclic_flats")) {
      const Json& z = j["cyclic_flats"];
      if (!z.is_array()) throw InputError("cyclic_flats: expected an array");
      std::vector<RankedSet> family;
      for (std::size_t i = 0; i < z.size(); ++i) {
        const std::string where = "cyclic_flats[" + std::to_string(i) + "]";
        const Json& r = field(z[i], "rank", where);
        if (!r.is_number_integer()) throw InputError(where + ".rank: expected an integer");
        family.push_back({mask_from(blank, field(z[i], "set", where), where + ".set"), r.get<int>()});
      }
      doc.matroid = from_cyclic_flats(ground, family);
    } else {
      const Json& t = j["transversal"];
      if (!t.is_array()) throw InputError("transversal: expected an array");
      std::vector<Mask> sets;
      for (std::size_t i = 0; i < t.size(); ++i) sets.push_back(mask_from(blank, t[i], "transversal[" + std::to_string(i) + "]"));
      doc.matroid = transversal(ground, sets);
    }
  }
  if (j.contains("order")) doc.order = string_list(j["order"], "order");
  if (doc.order) (void)parse_order(doc.matroid, *doc.order);
  return doc;
}

MatroidDocument parse_document(const std::string& text, const std::string& source) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const Json::parse_error& e) {
    const std::string msg = e.what();
    const auto colon = msg.find(": ");
    throw InputError(source + ":" + line_col(text, e.byte) + ": JSON syntax error" +
                     (colon == std::string::npos ? "" : msg.substr(colon)));
  }
  try {
    return document_from_json(j);
  } catch (const Error& e) {
    throw InputError(source + ": " + e.what());
  }
}

MatroidDocument read_document(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError(path + ": cannot open file");
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_document(ss.str(), path);
}

Json labels_json(const Matroid& m, Mask x) { return Json(m.labels_of(x)); }

Json document_to_json(const Matroid& m, const std::string& name, const std::optional<std::vector<std::string>>& order) {
  Json j;
  j["version"] = kFormatVersion;
  j["name"] = name;
  j["ground"] = m.labels();
  Json bases = Json::array();
  for (Mask b : m.bases()) bases.push_back(labels_json(m, b));
  j["bases"] = std::move(bases);
  if (order) j["order"] = *order;
  return j;
}

Json certificate_to_json(const Matroid& m, const Certificate& c) {
  return std::visit(
      [&](const auto& w) -> Json {
        using W = std::decay_t<decltype(w)>;
        Json j;
        if constexpr (std::is_same_v<W, std::monostate>) {
          return nullptr;
        } else if constexpr (std::is_same_v<W, BasisWitness>) {
          j["type"] = "basis";
          j["set"] = labels_json(m, w.set);
          j["basis_of_matroid"] = w.basis_of_matroid;
        } else if constexpr (std::is_same_v<W, SortWitness>) {
          j["type"] = "sort";
          j["b1"] = labels_json(m, w.b1);
          j["b2"] = labels_json(m, w.b2);
          j["odd"] = labels_json(m, w.odd);
          j["even"] = labels_json(m, w.even);
        } else if constexpr (std::is_same_v<W, FlatComponentWitness>) {
          j["type"] = "flat-component";
          j["flat"] = labels_json(m, w.flat);
          j["component"] = labels_json(m, w.component);
        } else if constexpr (std::is_same_v<W, CyclicSetWitness>) {
          j["type"] = "cyclic-set";
          j["set"] = labels_json(m, w.set);
        } else if constexpr (std::is_same_v<W, MinorWitness>) {
          j["type"] = "minor";
          j["contracted"] = labels_json(m, w.contracted);
          j["circuit"] = {m.label(w.a), m.label(w.b)};
          j["cocircuit"] = {m.label(w.e), m.label(w.f)};
        } else if constexpr (std::is_same_v<W, FlatWitness>) {
          j["type"] = "flat";
          j["flat"] = labels_json(m, w.flat);
        } else if constexpr (std::is_same_v<W, FlagWitness>) {
          j["type"] = "flag";
          Json flag = Json::array();
          for (Mask f : w.flag) flag.push_back(labels_json(m, f));
          j["flag"] = std::move(flag);
        } else if constexpr (std::is_same_v<W, CrossingWitness>) {
          j["type"] = "crossing";
          j["block1"] = labels_json(m, w.block1);
          j["block2"] = labels_json(m, w.block2);
        } else if constexpr (std::is_same_v<W, SearchWitness>) {
          j["type"] = "search";
          j["component"] = labels_json(m, w.component);
          j["nodes"] = w.nodes;
        }
        return j;
      },
      c);
}

Certificate certificate_from_json(const Matroid& m, const Json& j) {
  if (j.is_null()) return std::monostate{};
  if (!j.is_object()) throw InputError("certificate: expected an object or null");
  const Json& type = field(j, "type", "certificate");
  if (!type.is_string()) throw InputError("certificate.type: expected a string");
  const std::string t = type.get<std::string>();
  auto set = [&](const char* key) { return mask_from(m, field(j, key, "certificate"), std::string("certificate.") + key); };
  auto pair = [&](const char* key) {
    const Json& p = field(j, key, "certificate");
    if (!p.is_array() || p.size() != 2) throw InputError(std::string("certificate.") + key + ": expected two labels");
    return std::pair{element_from(m, p[0], key), element_from(m, p[1], key)};
  };
  if (t == "basis") {
    const Json& b = field(j, "basis_of_matroid", "certificate");
    if (!b.is_boolean()) throw InputError("certificate.basis_of_matroid: expected a boolean");
    return BasisWitness{set("set"), b.get<bool>()};
  }
  if (t == "sort") return SortWitness{set("b1"), set("b2"), set("odd"), set("even")};
  if (t == "flat-component") return FlatComponentWitness{set("flat"), set("component")};
  if (t == "cyclic-set") return CyclicSetWitness{set("set")};
  if (t == "minor") {
    const auto [a, b] = pair("circuit");
    const auto [e, f] = pair("cocircuit");
    return MinorWitness{set("contracted"), a, b, e, f};
  }
  if (t == "flat") return FlatWitness{set("flat")};
  if (t == "flag") {
    const Json& f = field(j, "flag", "certificate");
    if (!f.is_array()) throw InputError("certificate.flag: expected an array");
    FlagWitness w;
    for (std::size_t i = 0; i < f.size(); ++i) w.flag.push_back(mask_from(m, f[i], "certificate.flag[" + std::to_string(i) + "]"));
    return w;
  }
  if (t == "crossing") return CrossingWitness{set("block1"), set("block2")};
  if (t == "search") {
    const Json& n = field(j, "nodes", "certificate");
    if (!n.is_number_unsigned()) throw InputError("certificate.nodes: expected a count");
    return SearchWitness{set("component"), n.get<std::uint64_t>()};
  }
  throw InputError("certificate.type: unknown type '" + t + "'");
}

Json report_to_json(const Matroid& m, const CheckReport& r) {
  Json j;
  j["method"] = method_name(r.method);
  j["verdict"] = r.verdict;
  j["budget_exhausted"] = r.budget_exhausted;
  j["order"] = r.order ? Json(r.order->labels(m)) : Json(nullptr);
  j["removed"] = labels_json(m, r.removed);
  j["nodes"] = r.nodes;
  j["certificate"] = certificate_to_json(m, r.certificate);
  return j;
}

CheckReport report_from_json(const Matroid& m, const Json& j) {
  if (!j.is_object()) throw InputError("report: expected an object");
  CheckReport r;
  const Json& method = field(j, "method", "report");
  if (!method.is_string()) throw InputError("report.method: expected a string");
  r.method = parse_method(method.get<std::string>());
  const Json& verdict = field(j, "verdict", "report");
  if (!verdict.is_boolean()) throw InputError("report.verdict: expected a boolean");
  r.verdict = verdict.get<bool>();
  if (j.contains("budget_exhausted") && j["budget_exhausted"].is_boolean()) r.budget_exhausted = j["budget_exhausted"].get<bool>();
  if (j.contains("order") && !j["order"].is_null()) r.order = parse_order(m, string_list(j["order"], "report.order"));
  if (j.contains("removed")) r.removed = mask_from(m, j["removed"], "report.removed");
  if (j.contains("nodes") && j["nodes"].is_number_unsigned()) r.nodes = j["nodes"].get<std::uint64_t>();
  r.certificate = certificate_from_json(m, j.contains("certificate") ? j["certificate"] : Json(nullptr));
  return r;
}

Json theorem_to_json(const TheoremReport& r) {
  Json j;
  Json clauses = Json::array();
  for (const auto& c : r.clauses) {
    Json cj;
    cj["clause"] = c.name;
    cj["holds"] = c.holds;
    if (!c.detail.empty()) cj["detail"] = c.detail;
    clauses.push_back(std::move(cj));
  }
  j["clauses"] = std::move(clauses);
  j["hypotheses_hold"] = r.hypotheses_hold;
  j["conclusion"] = conclusion_name(r.conclusion);
  j["verdict"] = r.verdict();
  if (r.bonding) {
    j["bonding"] = document_to_json(*r.bonding, "bonding");
    if (r.bonding_check) j["bonding_check"] = report_to_json(*r.bonding, *r.bonding_check);
  }
  return j;
}

Json exmin_to_json(const Matroid& m, const ExminReport& r) {
  Json j;
  j["verdict"] = r.verdict;
  j["budget_exhausted"] = r.budget_exhausted;
  if (!r.failure.empty()) j["failure"] = r.failure;
  j["n"] = m.size();
  j["rank"] = m.rank();
  j["self"] = report_to_json(m, r.self);
  Json minors = Json::array();
  for (std::size_t i = 0; i < std::max(r.deletions.size(), r.contractions.size()); ++i) {
    Json e;
    const int idx = m.index_of(i < r.deletions.size() ? r.deletions[i].first : r.contractions[i].first);
    e["element"] = m.label(idx);
    const Mask rest = m.ground() & ~bit(idx);
    auto brief = [&](const CheckReport& c) {
      Json b;
      b["verdict"] = c.verdict;
      if (c.order) {
        std::vector<std::string> labels;
        const auto all = m.labels_of(rest);
        for (int p = 0; p < c.order->size(); ++p) labels.push_back(all[c.order->at(p)]);
        b["order"] = labels;
      }
      return b;
    };
    if (i < r.deletions.size()) e["deletion"] = brief(r.deletions[i].second);
    if (i < r.contractions.size()) e["contraction"] = brief(r.contractions[i].second);
    minors.push_back(std::move(e));
  }
  j["minors"] = std::move(minors);
  return j;
}

int exit_code(const CheckReport& r) {
  if (r.budget_exhausted) return kExitBudget;
  return r.verdict ? kExitTrue : kExitFalse;
}

namespace {

Json info_json(const MatroidDocument& doc) {
  const Matroid& m = doc.matroid;
  Json j;
  j["command"] = "info";
  j["name"] = doc.name;
  j["n"] = m.size();
  j["rank"] = m.rank();
  j["bases"] = m.bases().size();
  j["loops"] = labels_json(m, m.loops());
  j["coloops"] = labels_json(m, m.coloops());
  Json comps = Json::array();
  for (Mask b : components(m).blocks) comps.push_back(labels_json(m, b));
  j["components"] = std::move(comps);
  Json zs = Json::array();
  for (const auto& z : cyclic_flats(m)) {
    Json zj;
    zj["set"] = labels_json(m, z.set);
    zj["rank"] = z.rank;
    zs.push_back(std::move(zj));
  }
  j["cyclic_flats"] = std::move(zs);
  Json cls = Json::array();
  for (Mask b : clonal_classes(m).blocks) cls.push_back(labels_json(m, b));
  j["clonal_classes"] = std::move(cls);
  return j;
}

LinearOrder order_for(const MatroidDocument& doc, const std::string& order_csv) {
  if (!order_csv.empty()) return parse_order(doc.matroid, split_labels(order_csv));
  if (doc.order) return parse_order(doc.matroid, *doc.order);
  return LinearOrder::identity(doc.matroid.size());
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError(path + ": cannot open file");
  std::ostringstream ss;
  ss << in.rdbuf();
  const std::string text = ss.str();
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw InputError(path + ":" + line_col(text, e.byte) + ": JSON syntax error");
  }
}

// Accepts either a bare report or a command output that wraps one under "report".
int verify_report(const Matroid& m, const std::string& path, std::ostream& out) {
  Json j = read_json_file(path);
  if (j.contains("report")) j = j["report"];
  const CheckReport r = report_from_json(m, j);
  const bool ok = replay(m, r);
  Json o;
  o["command"] = "verify-certificate";
  o["replays"] = ok;
  o["verdict"] = r.verdict;
  o["budget_exhausted"] = r.budget_exhausted;
  out << o.dump(2) << "\n";
  if (!ok) return kExitInput;
  return exit_code(r);
}

void maybe_time(Json& j, bool timing, std::chrono::steady_clock::time_point t0) {
  if (!timing) return;
  j["timing_ms"] = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
}

std::vector<Method> all_order_methods() {
  return {Method::Necklace, Method::Sorting,        Method::Cip,   Method::DualCyclic,
          Method::Rank2,    Method::ConnectedFlats, Method::Flags, Method::Components};
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Positroid recognition, bonding and excluded-minor tools", "posmat"};
  app.require_subcommand(1);
  bool timing = false;
  app.add_flag("--timing", timing, "Add wall-clock timing to reports");

  std::string file, file2, order_csv, method_name_arg = "cip", verify_path, output_path, check2, family, params, sweep;
  bool all = false, check1 = false, dual_flag = false;
  int k = 2, max_n = 8;
  std::uint64_t budget = kDefaultBudget, seed = 1, count_arg = 100;

  auto* info = app.add_subcommand("info", "Summarize a matroid document");
  info->add_option("file", file, "Matroid document")->required();

  auto* check = app.add_subcommand("check-order", "Test whether an order is a positroid order");
  check->add_option("file", file, "Matroid document")->required();
  check->add_option("--order", order_csv, "Comma-separated labels (default: document order, else ground order)");
  check->add_option("--method", method_name_arg, "necklace, sorting, cip, dual, rank2, arw2, flags, components");
  check->add_flag("--all", all, "Run every applicable test and require agreement");
  check->add_option("--k", k, "Flag length for --method flags");
  check->add_option("--verify-certificate", verify_path, "Replay a report produced by check-order");

  auto* find = app.add_subcommand("find-order", "Search for a positroid order");
  find->add_option("file", file, "Matroid document")->required();
  find->add_option("--budget", budget, "Search node budget per component");
  find->add_option("--verify-certificate", verify_path, "Replay a report produced by find-order");

  auto* neck = app.add_subcommand("necklace", "Grassmann necklace along an order");
  neck->add_option("file", file, "Matroid document")->required();
  neck->add_option("--order", order_csv, "Comma-separated labels");

  auto* bondc = app.add_subcommand("bond", "Bond two matroids along their shared labels");
  bondc->add_option("m", file, "First matroid document")->required();
  bondc->add_option("n", file2, "Second matroid document")->required();
  bondc->add_flag("--check1", check1, "Check the independent clone set theorem");
  bondc->add_option("--check2", check2, "Check the variant theorem with P=label,label,...");
  bondc->add_option("-o,--output", output_path, "Write the bonded matroid document here");
  bondc->add_option("--budget", budget, "Search node budget");

  auto* ex = app.add_subcommand("exmin", "Verify excluded minors");
  ex->add_option("file", file, "Matroid document");
  ex->add_option("--family", family, "Family name");
  ex->add_option("--params", params, "Comma-separated family parameters");
  ex->add_flag("--dual", dual_flag, "Use the dual of the family member");
  ex->add_option("--sweep", sweep, "NAME[:MAX] streams one report per parameter point");
  ex->add_option("--budget", budget, "Search node budget");

  auto* rc = app.add_subcommand("random-check", "Randomized agreement of the order tests");
  rc->add_option("--seed", seed, "Random seed");
  rc->add_option("--count", count_arg, "Number of random matroids");
  rc->add_option("--max-n", max_n, "Largest ground set")->check(CLI::Range(1, kMaxElements));

  std::vector<std::string> rev(args.rbegin(), args.rend() - (args.empty() ? 0 : 1));
  try {
    app.parse(rev);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitTrue;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitTrue;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitInput;
  }

  const auto t0 = std::chrono::steady_clock::now();
  try {
    if (*info) {
      Json j = info_json(read_document(file));
      maybe_time(j, timing, t0);
      out << j.dump(2) << "\n";
      return kExitTrue;
    }
    if (*check) {
      const MatroidDocument doc = read_document(file);
      const Matroid& m = doc.matroid;
      if (!verify_path.empty()) return verify_report(m, verify_path, out);
      const LinearOrder ord = order_for(doc, order_csv);
      Json j;
      j["command"] = "check-order";
      j["name"] = doc.name;
      j["order"] = ord.labels(m);
      if (!all) {
        const CheckReport r = check_positroid_order(m, ord, parse_method(method_name_arg), k);
        j["verdict"] = r.verdict;
        j["report"] = report_to_json(m, r);
        maybe_time(j, timing, t0);
        out << j.dump(2) << "\n";
        return exit_code(r);
      }
      Json reports = Json::array();
      std::optional<bool> common;
      bool agree = true;
      for (Method meth : all_order_methods()) {
        Json rj;
        try {
          const CheckReport r = check_positroid_order(m, ord, meth, k);
          rj = report_to_json(m, r);
          if (common && *common != r.verdict) agree = false;
          common = common.value_or(r.verdict);
        } catch (const PreconditionError& e) {
          rj["method"] = method_name(meth);
          rj["applicable"] = false;
          rj["reason"] = e.what();
        }
        reports.push_back(std::move(rj));
      }
      j["agree"] = agree;
      j["verdict"] = common.value_or(false);
      j["reports"] = std::move(reports);
      maybe_time(j, timing, t0);
      out << j.dump(2) << "\n";
      if (!agree) {
        err << "error: the order tests disagree\n";
        return kExitFalse;
      }
      return common.value_or(false) ? kExitTrue : kExitFalse;
    }
    if (*find) {
      const MatroidDocument doc = read_document(file);
      if (!verify_path.empty()) return verify_report(doc.matroid, verify_path, out);
      const CheckReport r = find_positroid_order(doc.matroid, budget);
      Json j;
      j["command"] = "find-order";
      j["name"] = doc.name;
      j["verdict"] = r.verdict;
      j["report"] = report_to_json(doc.matroid, r);
      maybe_time(j, timing, t0);
      out << j.dump(2) << "\n";
      return exit_code(r);
    }
    if (*neck) {
      const MatroidDocument doc = read_document(file);
      const Matroid& m = doc.matroid;
      const LinearOrder ord = order_for(doc, order_csv);
      Json j;
      j["command"] = "necklace";
      j["name"] = doc.name;
      j["order"] = ord.labels(m);
      Json entries = Json::array();
      for (Mask b : grassmann_necklace(m, ord)) {
        Json e = Json::array();
        for (int p = 0; p < ord.size(); ++p) {
          if (has(b, ord.at(p))) e.push_back(m.label(ord.at(p)));
        }
        entries.push_back(std::move(e));
      }
      j["necklace"] = std::move(entries);
      const CheckReport r = is_positroid_order_necklace(m, ord);
      j["is_positroid_order"] = r.verdict;
      maybe_time(j, timing, t0);
      out << j.dump(2) << "\n";
      return kExitTrue;
    }
    if (*bondc) {
      const MatroidDocument dm = read_document(file), dn = read_document(file2);
      if (check1 || !check2.empty()) {
        const TheoremReport r = check1 ? bond_theorem_check_1(dm.matroid, dn.matroid, budget)
                                       : [&] {
                                           std::string p = check2;
                                           if (p.rfind("P=", 0) == 0) p = p.substr(2);
                                           return bond_theorem_check_2(dm.matroid, dn.matroid, split_labels(p), budget);
                                         }();
        Json j;
        j["command"] = check1 ? "bond --check1" : "bond --check2";
        j["theorem"] = theorem_to_json(r);
        maybe_time(j, timing, t0);
        if (!output_path.empty() && r.bonding) {
          std::ofstream o(output_path);
          o << document_to_json(*r.bonding, dm.name + "+" + dn.name).dump(2) << "\n";
        }
        out << j.dump(2) << "\n";
        if (r.conclusion == TheoremReport::Conclusion::Undetermined) return kExitBudget;
        return r.verdict() ? kExitTrue : kExitFalse;
      }
      const Matroid b = bond(dm.matroid, dn.matroid);
      const Json doc = document_to_json(b, dm.name + "+" + dn.name);
      if (!output_path.empty()) {
        std::ofstream o(output_path);
        if (!o) throw InputError(output_path + ": cannot write file");
        o << doc.dump(2) << "\n";
      } else {
        out << doc.dump(2) << "\n";
      }
      return kExitTrue;
    }
    if (*ex) {
      PositroidCache cache;
      if (!sweep.empty()) {
        std::string name = sweep;
        int max_size = kMaxElements;
        if (const auto c = sweep.find(':'); c != std::string::npos) {
          name = sweep.substr(0, c);
          const auto v = split_ints(sweep.substr(c + 1));
          if (v.size() != 1) throw InputError("--sweep: expected NAME[:MAX]");
          max_size = v[0];
        }
        const Family f = parse_family(name);
        const bool with_duals = f == Family::PavingK || f == Family::SparsePQ || f == Family::SparsePQST;
        bool all_true = true, exhausted = false;
        for (const auto& p : sweep_params(f, max_size)) {
          for (bool d : {false, true}) {
            if (d && !with_duals) continue;
            Matroid m = generate(f, p);
            if (d) m = dual(m);
            const ExminReport r = verify_excluded_minor(m, &cache, budget);
            Json j;
            j["family"] = family_name(f);
            j["params"] = p;
            j["dual"] = d;
            j["n"] = m.size();
            j["verdict"] = r.verdict;
            j["budget_exhausted"] = r.budget_exhausted;
            if (!r.failure.empty()) j["failure"] = r.failure;
            out << j.dump() << "\n";
            all_true = all_true && r.verdict;
            exhausted = exhausted || r.budget_exhausted;
          }
        }
        if (exhausted) return kExitBudget;
        return all_true ? kExitTrue : kExitFalse;
      }
      Matroid m;
      Json j;
      j["command"] = "exmin";
      if (!family.empty()) {
        const Family f = parse_family(family);
        const auto p = split_ints(params);
        m = generate(f, p);
        if (dual_flag) m = dual(m);
        j["family"] = family_name(f);
        j["params"] = p;
        j["dual"] = dual_flag;
      } else if (!file.empty()) {
        const MatroidDocument doc = read_document(file);
        m = dual_flag ? dual(doc.matroid) : doc.matroid;
        j["name"] = doc.name;
      } else {
        throw InputError("exmin: give a document, --family with --params, or --sweep");
      }
      const ExminReport r = verify_excluded_minor(m, &cache, budget);
      j["report"] = exmin_to_json(m, r);
      j["verdict"] = r.verdict;
      maybe_time(j, timing, t0);
      out << j.dump(2) << "\n";
      if (r.budget_exhausted) return kExitBudget;
      return r.verdict ? kExitTrue : kExitFalse;
    }
    if (*rc) {
      Rng rng(seed);
      std::uint64_t checks = 0, disagreements = 0;
      Json first = nullptr;
      for (std::uint64_t i = 0; i < count_arg; ++i) {
        Matroid m = random_matroid(rng, uniform_int(rng, 1, max_n));
        const LinearOrder ord = random_order(rng, m.size());
        std::optional<bool> common;
        for (Method meth : {Method::Necklace, Method::Sorting, Method::Cip, Method::Rank2}) {
          const CheckReport r = check_positroid_order(m, ord, meth);
          ++checks;
          if ((common && *common != r.verdict) || !replay(m, r)) {
            ++disagreements;
            if (first.is_null()) {
              first = document_to_json(m, "disagreement", ord.labels(m));
              first["method"] = method_name(meth);
            }
          }
          common = common.value_or(r.verdict);
        }
      }
      Json j;
      j["command"] = "random-check";
      j["seed"] = seed;
      j["count"] = count_arg;
      j["checks"] = checks;
      j["disagreements"] = disagreements;
      j["first_disagreement"] = first;
      maybe_time(j, timing, t0);
      out << j.dump(2) << "\n";
      return disagreements == 0 ? kExitTrue : kExitFalse;
    }
  } catch (const InternalError& e) {
    err << "internal error: " << e.what() << "\n";
    return kExitInput;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitInput;
  }
  return kExitInput;
}

}  // namespace posmat
