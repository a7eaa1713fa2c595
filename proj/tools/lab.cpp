#include "lab.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <chrono>
#include <exception>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <map>
#include <optional>
#include <sstream>

#include "fullness/errors.hpp"
#include "fullness/invariants.hpp"
#include "fullness/parser.hpp"

namespace lab {

namespace {

using fullness::Ideal;
using fullness::InputError;
using fullness::MathError;
using fullness::Polynomial;
using fullness::QuotientRingPtr;
using json = nlohmann::ordered_json;

const std::vector<std::string> kTasks{"gb", "colon", "rr", "rednum", "dao", "verify"};

struct Settings {
  std::uint64_t seed = fullness::GenericElementPolicy{}.seed;
  unsigned trials = fullness::GenericElementPolicy{}.trials;
  unsigned rr_window = fullness::RatliffRushOptions{}.window;
  unsigned j_cap = fullness::RatliffRushOptions{}.j_cap;
  unsigned s_bound = 0;
  unsigned safety = fullness::DaoOptions{}.safety;
  unsigned max_iter = fullness::DaoOptions{}.max_iter;
  unsigned degree_cap = fullness::GroebnerOptions{}.degree_cap;
  std::optional<unsigned> assert_dim;
  bool assert_minimal = false;
  std::optional<unsigned> known_reg;
};

struct CommandLine {
  std::string task;
  std::string input;
  std::optional<std::uint64_t> seed;
  std::optional<unsigned> trials, rr_window, s_bound;
  std::vector<std::string> params;
  bool slow = false;
  bool table = false;
  double time_budget = 1800;
};

struct Problem {
  std::string name;
  std::string description;
  std::string task;
  bool slow = false;
  std::map<std::string, long> parameters;
  QuotientRingPtr ring;
  std::map<std::string, Ideal> ideals;
  json target = json::object();
  json expected;
  Settings settings;
};

// Names the sub-computation a failure belongs to.
class Stage {
 public:
  explicit Stage(std::string& slot, std::string name)
      : slot_(slot), saved_(slot), exceptions_(std::uncaught_exceptions()) {
    slot_ = std::move(name);
  }
  // Keeps the innermost name while an exception propagates.
  ~Stage() {
    if (std::uncaught_exceptions() == exceptions_) slot_ = saved_;
  }

 private:
  std::string& slot_;
  std::string saved_;
  int exceptions_;
};

std::uint64_t fnv1a(std::string_view bytes) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

std::string hex64(std::uint64_t v) {
  std::ostringstream s;
  s << std::hex << std::setw(16) << std::setfill('0') << v;
  return s.str();
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot read input file '" + path.string() + "'");
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

std::filesystem::path resolve_input(const std::string& input) {
  std::filesystem::path p(input);
  if (std::filesystem::is_regular_file(p)) return p;
  for (auto candidate : {corpus_dir() / input, corpus_dir() / (input + ".json")}) {
    if (std::filesystem::is_regular_file(candidate)) return candidate;
  }
  throw InputError("no input file or corpus entry named '" + input + "'");
}

// "{a+b}" style placeholders: sums of parameter names and integer literals.
std::string substitute(const std::string& text, const std::map<std::string, long>& params) {
  std::string out;
  std::size_t i = 0;
  while (i < text.size()) {
    if (text[i] != '{') {
      out += text[i++];
      continue;
    }
    std::size_t close = text.find('}', i);
    if (close == std::string::npos) throw InputError("unterminated placeholder in '" + text + "'");
    std::string expr = text.substr(i + 1, close - i - 1);
    long value = 0;
    std::stringstream parts(expr);
    std::string part;
    while (std::getline(parts, part, '+')) {
      part.erase(std::remove_if(part.begin(), part.end(), ::isspace), part.end());
      if (part.empty()) throw InputError("empty term in placeholder '{" + expr + "}'");
      if (std::all_of(part.begin(), part.end(), ::isdigit)) {
        value += std::stol(part);
      } else {
        auto it = params.find(part);
        if (it == params.end()) throw InputError("unknown parameter '" + part + "' in '" + text + "'");
        value += it->second;
      }
    }
    out += std::to_string(value);
    i = close + 1;
  }
  return out;
}

template <typename T>
T get_number(const json& j, const std::string& key, T fallback) {
  if (!j.contains(key)) return fallback;
  const json& v = j.at(key);
  if (!v.is_number_integer() || v.get<long long>() < 0) {
    throw InputError("option '" + key + "' must be a non-negative integer");
  }
  return v.get<T>();
}

std::uint64_t parse_seed(const json& v) {
  if (v.is_number_unsigned() || (v.is_number_integer() && v.get<long long>() >= 0)) {
    return v.get<std::uint64_t>();
  }
  if (v.is_string()) {
    try {
      std::size_t used = 0;
      std::uint64_t s = std::stoull(v.get<std::string>(), &used, 0);
      if (used == v.get<std::string>().size()) return s;
    } catch (const std::exception&) {
    }
  }
  throw InputError("seed must be a non-negative integer or an integer string such as \"0x5eed\"");
}

Settings read_settings(const json& options) {
  static const std::vector<std::string> known{"seed",      "trials",     "rr_window",
                                              "j_cap",     "s_bound",    "safety",
                                              "max_iter",  "degree_cap", "assert_dim",
                                              "assert_minimal", "known_reg"};
  if (!options.is_object()) throw InputError("'options' must be an object");
  for (const auto& [key, value] : options.items()) {
    if (std::find(known.begin(), known.end(), key) == known.end()) {
      throw InputError("unknown option '" + key + "'");
    }
  }
  Settings s;
  if (options.contains("seed")) s.seed = parse_seed(options.at("seed"));
  s.trials = get_number(options, "trials", s.trials);
  s.rr_window = get_number(options, "rr_window", s.rr_window);
  s.j_cap = get_number(options, "j_cap", s.j_cap);
  s.s_bound = get_number(options, "s_bound", s.s_bound);
  s.safety = get_number(options, "safety", s.safety);
  s.max_iter = get_number(options, "max_iter", s.max_iter);
  s.degree_cap = get_number(options, "degree_cap", s.degree_cap);
  if (options.contains("assert_dim")) s.assert_dim = get_number<unsigned>(options, "assert_dim", 0);
  if (options.contains("known_reg")) s.known_reg = get_number<unsigned>(options, "known_reg", 0);
  if (options.contains("assert_minimal")) {
    if (!options.at("assert_minimal").is_boolean()) {
      throw InputError("option 'assert_minimal' must be a boolean");
    }
    s.assert_minimal = options.at("assert_minimal").get<bool>();
  }
  if (s.trials == 0) throw InputError("trials must be positive");
  return s;
}

std::vector<std::string> string_list(const json& j, const std::string& what) {
  if (!j.is_array()) throw InputError(what + " must be a list of strings");
  std::vector<std::string> out;
  for (const auto& v : j) {
    if (!v.is_string()) throw InputError(what + " must be a list of strings");
    out.push_back(v.get<std::string>());
  }
  return out;
}

std::map<std::string, long> parse_param_overrides(const std::vector<std::string>& specs) {
  std::map<std::string, long> out;
  for (const auto& spec : specs) {
    std::stringstream parts(spec);
    std::string item;
    while (std::getline(parts, item, ',')) {
      auto eq = item.find('=');
      if (eq == std::string::npos) throw InputError("parameter override '" + item + "' lacks '='");
      std::string key = item.substr(0, eq);
      try {
        std::size_t used = 0;
        long v = std::stol(item.substr(eq + 1), &used);
        if (used != item.size() - eq - 1) throw std::invalid_argument(item);
        out[key] = v;
      } catch (const std::exception&) {
        throw InputError("parameter override '" + item + "' is not an integer");
      }
    }
  }
  return out;
}

Problem load_problem(const json& doc, const std::map<std::string, long>& overrides,
                     const fullness::GroebnerOptions& gb_options) {
  if (!doc.is_object()) throw InputError("problem file must be a JSON object");
  for (const char* key : {"ring", "task"}) {
    if (!doc.contains(key)) throw InputError(std::string("problem file lacks '") + key + "'");
  }
  if (doc.contains("schema") && doc.at("schema") != kProblemSchema) {
    throw InputError("unsupported problem schema " + doc.at("schema").dump());
  }
  Problem p;
  p.name = doc.value("name", std::string("unnamed"));
  p.description = doc.value("description", std::string());
  p.task = doc.at("task").get<std::string>();
  p.slow = doc.value("slow", false);
  if (std::find(kTasks.begin(), kTasks.end(), p.task) == kTasks.end()) {
    throw InputError("unknown task '" + p.task + "'");
  }

  long minimum = doc.value("parameter_min", std::numeric_limits<long>::min());
  if (doc.contains("parameters")) {
    for (const auto& [key, value] : doc.at("parameters").items()) {
      if (!value.is_number_integer()) throw InputError("parameter '" + key + "' must be an integer");
      p.parameters[key] = value.get<long>();
    }
  }
  for (const auto& [key, value] : overrides) {
    if (!p.parameters.count(key)) throw InputError("problem has no parameter '" + key + "'");
    p.parameters[key] = value;
  }
  for (const auto& [key, value] : p.parameters) {
    if (value < minimum) {
      throw InputError("parameter '" + key + "' must be at least " + std::to_string(minimum));
    }
  }

  const json& ring = doc.at("ring");
  auto characteristic = get_number<std::uint32_t>(ring, "characteristic", fullness::Field::kDefaultPrime);
  auto vars = string_list(ring.value("variables", json::array()), "ring.variables");
  std::string order_name = ring.value("order", std::string("degrevlex"));
  fullness::MonomialOrder order = fullness::MonomialOrder::degrevlex();
  if (order_name == "lex") {
    order = fullness::MonomialOrder::lex();
  } else if (order_name != "degrevlex") {
    throw InputError("unknown monomial order '" + order_name + "'");
  }
  auto ambient = fullness::make_ring(vars, fullness::Field(characteristic), order);
  std::vector<Polynomial> relations;
  for (const auto& r : string_list(ring.value("relations", json::array()), "ring.relations")) {
    try {
      relations.push_back(fullness::parse_polynomial(substitute(r, p.parameters), ambient));
    } catch (const InputError& e) {
      throw InputError("relation \"" + r + "\": " + e.what());
    }
  }
  fullness::GroebnerOptions opts = gb_options;
  p.settings = read_settings(doc.value("options", json::object()));
  opts.degree_cap = p.settings.degree_cap;
  p.ring = fullness::QuotientRing::create(ambient, std::move(relations), opts);

  p.ideals.emplace("m", Ideal::maximal(p.ring));
  if (doc.contains("ideals")) {
    for (const auto& [name, gens] : doc.at("ideals").items()) {
      std::vector<Polynomial> polys;
      for (const auto& g : string_list(gens, "ideal " + name)) {
        try {
          polys.push_back(p.ring->parse(substitute(g, p.parameters)));
        } catch (const InputError& e) {
          throw InputError("ideal " + name + ", generator \"" + g + "\": " + e.what());
        }
      }
      p.ideals.insert_or_assign(name, Ideal(p.ring, std::move(polys)));
    }
  }
  if (doc.contains("target")) p.target = doc.at("target");
  if (doc.contains("expected")) p.expected = doc.at("expected");
  return p;
}

const Ideal& lookup_ideal(const Problem& p, const std::string& name) {
  auto it = p.ideals.find(name);
  if (it == p.ideals.end()) throw InputError("ideal '" + name + "' is not defined");
  return it->second;
}

std::string target_name(const Problem& p, const char* key, const std::string& fallback) {
  if (!p.target.contains(key)) return fallback;
  if (!p.target.at(key).is_string()) throw InputError(std::string("target.") + key + " must be a name");
  return p.target.at(key).get<std::string>();
}

json poly_list(const std::vector<Polynomial>& polys) {
  json out = json::array();
  for (const auto& f : polys) out.push_back(f.to_string());
  return out;
}

json predicate_json(const fullness::PredicateResult& r) {
  json out;
  out["value"] = r.value;
  out["certified"] = r.certified;
  out["trials_used"] = r.trials_used;
  out["witness"] = r.witness ? json(r.witness->to_string()) : json(nullptr);
  return out;
}

json rr_json(const fullness::RRChainRecord& rec, const Ideal& power) {
  json out;
  out["n"] = rec.n;
  out["chain_length"] = rec.chain.size();
  out["window"] = rec.window;
  out["certified"] = rec.certified;
  out["equals_power"] = fullness::equal_local(rec.stable_value, power);
  out["stable_value"] = poly_list(rec.stable_value.reduced_generators());
  return out;
}

json dao_json(const fullness::DaoReport& d, fullness::IdealPowers& m_powers) {
  json out;
  out["r_I"] = d.r_I;
  out["s"] = d.s;
  out["alpha"] = d.alpha;
  out["n1"] = d.n1;
  out["n2"] = d.n2;
  out["n3"] = d.n3;
  out["consistent"] = d.consistent;
  out["depth_witness"] = d.depth_witness.to_string();
  out["known_reg"] = d.known_reg ? json(*d.known_reg) : json(nullptr);
  out["within_reg_bound"] = d.within_reg_bound ? json(*d.within_reg_bound) : json(nullptr);
  json table = json::array();
  for (const auto& row : d.table) {
    json r;
    r["n"] = row.n;
    r["m_full"] = predicate_json(row.m_full);
    r["full"] = predicate_json(row.full);
    r["weakly_m_full"] = predicate_json(row.weakly_m_full);
    table.push_back(std::move(r));
  }
  out["predicate_table"] = std::move(table);
  json rr = json::array();
  for (const auto& rec : d.ratliff_rush) rr.push_back(rr_json(rec, m_powers(rec.n)));
  out["ratliff_rush"] = std::move(rr);
  out["diagnostics"] = d.diagnostics;
  return out;
}

json dao_certification(const fullness::DaoReport& d, const Settings& s) {
  json c;
  c["r_I"] = "exact";
  c["s"] = {{"certified", false},
            {"checked_up_to", d.s_certified_up_to},
            {"rr_window", s.rr_window},
            {"note", "colon chains judged stable after rr_window equal terms"}};
  c["n1_n3"] = "alpha = max(r_I, s - 1), cross-checked by exact weakly-m-full rows";
  c["n2"] = {{"certified", d.n2_certified},
             {"note", "positive n2 rests on a sampled 'not full'; rows past alpha follow from the "
                      "m-full iff next power full and weakly m-full equivalence"}};
  return c;
}

struct Outcome {
  json results;
  json certification;
  bool inconsistent = false;
  std::vector<std::string> notes;
};

fullness::GenericElementPolicy policy_of(const Settings& s) { return {s.trials, s.seed}; }

fullness::DaoOptions dao_options_of(const Settings& s) {
  fullness::DaoOptions o;
  o.rr.window = s.rr_window;
  o.rr.j_cap = s.j_cap;
  o.s_bound = s.s_bound;
  o.safety = s.safety;
  o.max_iter = s.max_iter;
  o.known_reg = s.known_reg;
  return o;
}

Outcome run_task(const std::string& task, const Problem& p, std::string& stage) {
  const Settings& s = p.settings;
  Outcome o;
  if (task == "gb") {
    std::string name = target_name(p, "ideal", "m");
    Stage st(stage, "Groebner basis of ideal " + name);
    const Ideal& ideal = lookup_ideal(p, name);
    o.results["ideal"] = name;
    o.results["order"] = p.ring->ambient()->order().name();
    o.results["basis"] = poly_list(ideal.basis().elements());
    o.results["generators"] = poly_list(ideal.reduced_generators());
    o.results["unit"] = ideal.is_unit();
    o.certification["basis"] = "exact";
  } else if (task == "colon") {
    std::string a = target_name(p, "ideal", "I");
    std::string b = target_name(p, "by", "m");
    Stage st(stage, "colon " + a + " : " + b);
    Ideal c = fullness::colon(lookup_ideal(p, a), lookup_ideal(p, b));
    o.results["ideal"] = a;
    o.results["by"] = b;
    o.results["generators"] = poly_list(c.reduced_generators());
    o.results["unit_locally"] = !c.inside_maximal();
    if (p.target.contains("compare")) {
      json cmp = json::object();
      for (const auto& item : p.target.at("compare").items()) {
        cmp[item.key()] = fullness::equal_local(c, lookup_ideal(p, item.key()));
      }
      o.results["equal_locally"] = std::move(cmp);
    }
    o.certification["generators"] = "exact";
  } else if (task == "rr") {
    std::string name = target_name(p, "ideal", "m");
    const Ideal& base = lookup_ideal(p, name);
    fullness::RatliffRushOptions ro{s.rr_window, s.j_cap};
    fullness::IdealPowers powers(base);
    json records = json::array();
    std::vector<unsigned> ns;
    const json& n = p.target.value("n", json(1));
    if (n.is_array()) {
      for (const auto& v : n) ns.push_back(v.get<unsigned>());
    } else {
      ns.push_back(n.get<unsigned>());
    }
    for (unsigned k : ns) {
      Stage st(stage, "Ratliff-Rush chain of " + name + "^" + std::to_string(k));
      records.push_back(rr_json(fullness::ratliff_rush_chain(powers, k, ro), powers(k)));
    }
    o.results["ideal"] = name;
    o.results["records"] = std::move(records);
    if (name == "m" && p.target.contains("s_bound")) {
      unsigned bound = p.target.at("s_bound").get<unsigned>();
      if (s.s_bound) bound = s.s_bound;
      Stage st(stage, "s-index scan up to " + std::to_string(bound));
      auto si = fullness::s_index(powers, bound, ro);
      o.results["s"] = si.s;
      o.results["s_checked_up_to"] = si.certified_up_to;
    }
    o.certification["stable_values"] = {{"certified", false}, {"rr_window", s.rr_window}};
  } else if (task == "rednum") {
    std::string name = target_name(p, "ideal", "I");
    Stage st(stage, "reduction number of " + name);
    auto cert = fullness::reduction_number(lookup_ideal(p, name), s.max_iter);
    o.results["ideal"] = name;
    o.results["r"] = cert.r;
    o.results["checked_up_to"] = cert.checked_up_to;
    o.certification["r"] = "exact";
  } else if (task == "dao" || task == "verify") {
    std::string name = target_name(p, "ideal", "I");
    const Ideal& ideal = lookup_ideal(p, name);
    fullness::IdealPowers m_powers(Ideal::maximal(p.ring));
    if (task == "dao") {
      Stage st(stage, "Dao numbers of " + name);
      auto d = fullness::dao_numbers(ideal, policy_of(s), dao_options_of(s));
      o.results = dao_json(d, m_powers);
      o.certification = dao_certification(d, s);
      o.inconsistent = !d.consistent;
    } else {
      Stage st(stage, "statement verification for " + name);
      fullness::VerifyOptions vo;
      vo.dao = dao_options_of(s);
      vo.assert_dim = s.assert_dim;
      vo.assert_minimal = s.assert_minimal;
      auto v = fullness::verify_statements(ideal, policy_of(s), vo);
      o.results["dao"] = dao_json(v.dao, m_powers);
      json checks = json::array();
      std::map<std::string, unsigned> counts;
      for (const auto& c : v.checks) {
        std::string status = fullness::to_string(c.status);
        ++counts[status];
        checks.push_back({{"statement", c.statement},
                          {"instance", c.instance},
                          {"status", status},
                          {"detail", c.detail}});
      }
      o.results["checks"] = std::move(checks);
      json summary = json::object();
      for (const auto& [k, v2] : counts) summary[k] = v2;
      o.results["summary"] = std::move(summary);
      o.results["violations"] = counts["VIOLATED"];
      o.results["assertions"] = {
          {"dimension", s.assert_dim ? json(*s.assert_dim) : json(nullptr)},
          {"minimal_reduction", s.assert_minimal}};
      o.certification = dao_certification(v.dao, s);
      o.certification["statements"] =
          "VIOLATED needs exact evidence; sampled negatives give UNCERTIFIED-DISCREPANCY";
      o.inconsistent = !v.dao.consistent || v.any_violation();
    }
    o.results["ideal"] = name;
  }
  return o;
}

const json* find_path(const json& root, const std::string& path) {
  const json* cur = &root;
  std::stringstream parts(path);
  std::string key;
  while (std::getline(parts, key, '.')) {
    if (cur->is_array() && !key.empty() && std::all_of(key.begin(), key.end(), ::isdigit)) {
      std::size_t index = std::stoul(key);
      if (index >= cur->size()) return nullptr;
      cur = &cur->at(index);
      continue;
    }
    if (!cur->is_object() || !cur->contains(key)) return nullptr;
    cur = &cur->at(key);
  }
  return cur;
}

// Compares the embedded expected values; `local` entries are generator lists
// compared as ideals of the local ring.
json check_expected(const json& expected, const json& results, const Problem& p) {
  json mismatches = json::array();
  for (const auto& [key, want] : expected.items()) {
    if (key == "local") {
      for (const auto& [path, gens] : want.items()) {
        const json* got = find_path(results, path);
        bool same = false;
        if (got && got->is_array()) {
          std::vector<std::string> w, g;
          for (const auto& x : gens) w.push_back(substitute(x.get<std::string>(), p.parameters));
          for (const auto& x : *got) g.push_back(x.get<std::string>());
          same = fullness::equal_local(Ideal::parse(p.ring, w), Ideal::parse(p.ring, g));
        }
        if (!same) {
          mismatches.push_back({{"key", path},
                                {"expected", gens},
                                {"actual", got ? *got : json(nullptr)},
                                {"comparison", "local ideal equality"}});
        }
      }
      continue;
    }
    const json* got = find_path(results, key);
    if (!got || *got != want) {
      mismatches.push_back({{"key", key}, {"expected", want}, {"actual", got ? *got : json(nullptr)}});
    }
  }
  return {{"matched", mismatches.empty()}, {"mismatches", std::move(mismatches)}};
}

void print_table(std::ostream& out, const json& report) {
  out << report.at("tool").get<std::string>() << " " << report.at("version").get<std::string>()
      << "  task=" << report.at("task").get<std::string>()
      << "  problem=" << report.at("problem").get<std::string>()
      << "  status=" << report.at("status").get<std::string>() << "\n";
  if (report.contains("reason")) out << "reason: " << report.at("reason").get<std::string>() << "\n";
  if (!report.contains("results")) return;
  const json& r = report.at("results");
  const json& dao = r.contains("dao") ? r.at("dao") : r;
  if (dao.contains("n1")) {
    out << "r_I=" << dao.at("r_I") << "  s=" << dao.at("s") << "  alpha=" << dao.at("alpha")
        << "  n1=" << dao.at("n1") << "  n2=" << dao.at("n2") << "  n3=" << dao.at("n3")
        << "  consistent=" << dao.at("consistent") << "\n";
    out << "  n  m-full  full  weakly\n";
    auto mark = [](const json& pr) {
      if (pr.at("value").get<bool>()) return std::string("yes");
      return pr.at("certified").get<bool>() ? std::string("no") : std::string("no*");
    };
    for (const auto& row : dao.at("predicate_table")) {
      out << std::setw(3) << row.at("n").get<unsigned>() << "  " << std::setw(6)
          << mark(row.at("m_full")) << "  " << std::setw(4) << mark(row.at("full")) << "  "
          << std::setw(6) << mark(row.at("weakly_m_full")) << "\n";
    }
    out << "  (no* = sampled negative, not certified)\n";
    for (const auto& d : dao.at("diagnostics")) out << "note: " << d.get<std::string>() << "\n";
  }
  if (r.contains("checks")) {
    for (const auto& c : r.at("checks")) {
      out << "[" << c.at("status").get<std::string>() << "] " << c.at("statement").get<std::string>()
          << " (" << c.at("instance").get<std::string>() << ")";
      if (!c.at("detail").get<std::string>().empty()) out << ": " << c.at("detail").get<std::string>();
      out << "\n";
    }
  }
  for (const char* key : {"r", "basis", "generators", "records", "s", "equal_locally"}) {
    if (r.contains(key)) out << key << ": " << r.at(key).dump() << "\n";
  }
  if (report.contains("expected")) {
    out << "expected values " << (report.at("expected").at("matched").get<bool>() ? "matched" : "MISMATCHED")
        << "\n";
    for (const auto& m : report.at("expected").at("mismatches")) out << "  " << m.dump() << "\n";
  }
}

void emit(std::ostream& out, const json& report, bool table) {
  if (table) {
    print_table(out, report);
  } else {
    out << report.dump(2) << "\n";
  }
}

int list_corpus(std::ostream& out, bool table) {
  std::vector<std::filesystem::path> files;
  std::filesystem::path dir = corpus_dir();
  if (std::filesystem::is_directory(dir)) {
    for (const auto& e : std::filesystem::directory_iterator(dir)) {
      if (e.path().extension() == ".json") files.push_back(e.path());
    }
  }
  std::sort(files.begin(), files.end());
  json entries = json::array();
  for (const auto& f : files) {
    json doc = json::parse(read_file(f));
    json e;
    e["name"] = doc.value("name", f.stem().string());
    e["file"] = f.filename().string();
    e["task"] = doc.value("task", std::string());
    e["slow"] = doc.value("slow", false);
    e["parameters"] = doc.value("parameters", json::object());
    e["expected"] = doc.value("expected", json::object());
    e["description"] = doc.value("description", std::string());
    entries.push_back(std::move(e));
  }
  if (table) {
    for (const auto& e : entries) {
      out << std::left << std::setw(24) << e.at("name").get<std::string>() << std::setw(8)
          << e.at("task").get<std::string>() << (e.at("slow").get<bool>() ? "slow  " : "      ")
          << e.at("description").get<std::string>() << "\n";
    }
  } else {
    out << json{{"tool", kToolName}, {"version", kVersion}, {"corpus", entries}}.dump(2) << "\n";
  }
  return kOk;
}

std::string override_fingerprint(const CommandLine& cl, const std::map<std::string, long>& params) {
  std::ostringstream s;
  s << "task=" << cl.task;
  if (cl.seed) s << ";seed=" << *cl.seed;
  if (cl.trials) s << ";trials=" << *cl.trials;
  if (cl.rr_window) s << ";rr_window=" << *cl.rr_window;
  if (cl.s_bound) s << ";s_bound=" << *cl.s_bound;
  for (const auto& [k, v] : params) s << ";" << k << "=" << v;
  s << ";slow=" << cl.slow;
  return s.str();
}

int run_problem(const CommandLine& cl, std::ostream& out, std::ostream& err) {
  auto start = std::chrono::steady_clock::now();
  std::string stage = "reading input";
  json report;
  report["tool"] = kToolName;
  report["version"] = kVersion;
  report["schema"] = kReportSchema;
  report["task"] = cl.task;
  report["problem"] = nullptr;
  try {
    std::filesystem::path path = resolve_input(cl.input);
    std::string bytes = read_file(path);
    json doc;
    try {
      doc = json::parse(bytes);
    } catch (const json::parse_error& e) {
      throw InputError(std::string("malformed JSON: ") + e.what());
    }
    auto params = parse_param_overrides(cl.params);
    report["input_hash"] = "fnv1a64:" + hex64(fnv1a(bytes + "\n" + override_fingerprint(cl, params)));

    fullness::GroebnerOptions gb;
    gb.deadline = start + std::chrono::duration_cast<std::chrono::steady_clock::duration>(
                              std::chrono::duration<double>(cl.time_budget));
    stage = "loading problem";
    Problem p;
    try {
      p = load_problem(doc, params, gb);
    } catch (const json::exception& e) {
      throw InputError(std::string("problem file does not match the schema: ") + e.what());
    }
    if (cl.seed) p.settings.seed = *cl.seed;
    if (cl.trials) {
      if (*cl.trials == 0) throw InputError("trials must be positive");
      p.settings.trials = *cl.trials;
    }
    if (cl.rr_window) p.settings.rr_window = *cl.rr_window;
    if (cl.s_bound) p.settings.s_bound = *cl.s_bound;
    std::string task = cl.task == "run" ? p.task : cl.task;

    report["task"] = task;
    report["problem"] = p.name;
    json echo;
    echo["ring"] = p.ring->to_string();
    echo["parameters"] = p.parameters;
    echo["target"] = p.target;
    json ideals = json::object();
    for (const auto& [name, ideal] : p.ideals) ideals[name] = poly_list(ideal.generators());
    echo["ideals"] = std::move(ideals);
    report["input"] = std::move(echo);
    report["presentation"] = "algebraic-local";
    report["policy"] = {{"seed", p.settings.seed},
                        {"trials", p.settings.trials},
                        {"sampler", "random linear forms, splitmix64 coefficients"},
                        {"rr_window", p.settings.rr_window},
                        {"s_bound", p.settings.s_bound}};

    if (p.slow && !cl.slow) {
      report["status"] = "SKIPPED-SLOW";
      report["reason"] = "marked slow; rerun with --slow";
      emit(out, report, cl.table);
      return kOk;
    }

    int code = kOk;
    try {
      Outcome o = run_task(task, p, stage);
      report["status"] = o.inconsistent ? "INCONSISTENT" : "OK";
      report["results"] = std::move(o.results);
      report["certification"] = std::move(o.certification);
      if (o.inconsistent) code = kMathError;
      bool same_task = task == p.task;
      if (!p.expected.is_null() && same_task) {
        report["expected"] = check_expected(p.expected, report["results"], p);
        if (!report["expected"]["matched"].get<bool>()) {
          report["status"] = "MISMATCH";
          code = kMathError;
        }
      }
    } catch (const fullness::TimeBudgetExceeded& e) {
      if (!p.slow) throw;
      report["status"] = "SKIPPED-SLOW";
      report["reason"] = std::string("time budget exhausted during ") + stage;
      code = kOk;
    }
    report["timing"] = {
        {"seconds", std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count()}};
    emit(out, report, cl.table);
    return code;
  } catch (const InputError& e) {
    err << "fullness-lab: input error while " << stage << ": " << e.what() << "\n";
    return kInputError;
  } catch (const MathError& e) {
    err << "fullness-lab: mathematical error in " << stage << ": " << e.what() << "\n";
    return kMathError;
  } catch (const std::invalid_argument& e) {
    err << "fullness-lab: input error while " << stage << ": " << e.what() << "\n";
    return kInputError;
  }
}

}  // namespace

std::filesystem::path corpus_dir() {
  if (const char* env = std::getenv("FULLNESS_CORPUS")) return env;
  return FULLNESS_CORPUS_DIR;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Asymptotic fullness invariants of ideals in local rings", kToolName};
  app.set_version_flag("--version", kVersion);
  CommandLine cl;
  std::vector<std::string> choices = kTasks;
  choices.push_back("run");
  choices.push_back("corpus");
  app.add_option("task", cl.task, "gb | colon | rr | rednum | dao | verify | run | corpus")
      ->required()
      ->check(CLI::IsMember(choices));
  app.add_option("--input,-i", cl.input, "problem file, or the name of a corpus entry");
  app.add_option("--seed", cl.seed, "seed of the generic-element sampler");
  app.add_option("--trials", cl.trials, "sampled linear forms per predicate");
  app.add_option("--rr-window", cl.rr_window, "equal colon-chain terms needed for stability");
  app.add_option("--s-bound", cl.s_bound, "largest power examined for s(m)");
  app.add_option("--param", cl.params, "parameter overrides, e.g. a=2,b=3,c=4");
  app.add_option("--time-budget", cl.time_budget, "seconds before giving up (default 1800)")
      ->check(CLI::PositiveNumber);
  app.add_flag("--slow", cl.slow, "run problems marked slow");
  auto* json_flag = app.add_flag("--json", "JSON report (default)");
  auto* table_flag = app.add_flag("--table", cl.table, "human-readable report");
  json_flag->excludes(table_flag);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    std::ostringstream o, x;
    int code = app.exit(e, o, x);
    out << o.str();
    err << x.str();
    return code == 0 ? kOk : kInputError;
  }
  if (cl.task == "corpus") return list_corpus(out, cl.table);
  if (cl.input.empty()) {
    err << "fullness-lab: --input is required for task " << cl.task << "\n";
    return kInputError;
  }
  return run_problem(cl, out, err);
}

}  // namespace lab
