#include <cstdlib>
#include <fstream>
#include <sstream>

#include "tworep_cli/cli.hpp"

namespace tworep::cli {

using nlohmann::json;

namespace {

std::string join_factors(const std::vector<long>& f) {
  if (f.empty()) return "0";
  std::string s;
  for (std::size_t i = 0; i < f.size(); ++i) s += (i ? " x Z/" : "Z/") + std::to_string(f[i]);
  return s;
}

template <class T>
T get(const json& j, const char* key, const std::string& where) {
  if (!j.contains(key)) throw ParseError(where + ": missing \"" + key + "\"");
  try {
    return j.at(key).get<T>();
  } catch (const json::exception&) {
    throw ParseError(where + ": \"" + key + "\" has the wrong type");
  }
}

GroupPtr build_group(const json& p, std::string& text) {
  if (!p.is_object()) throw ParseError("pi0 must be an object");
  const auto kind = get<std::string>(p, "kind", "pi0");
  if (kind == "cyclic") {
    const int n = get<int>(p, "n", "pi0");
    if (n < 1) throw InvalidSpec("pi0: cyclic order must be positive");
    text = n == 1 ? "1" : "Z/" + std::to_string(n);
    return FinGroup::cyclic(n);
  }
  if (kind == "symmetric") {
    const int n = get<int>(p, "n", "pi0");
    if (n < 1 || n > 5) throw InvalidSpec("pi0: symmetric degree must be in 1..5");
    text = "S_" + std::to_string(n);
    return FinGroup::symmetric(n);
  }
  if (kind == "dihedral") {
    const int m = get<int>(p, "m", "pi0");
    if (m < 2) throw InvalidSpec("pi0: dihedral needs m >= 2");
    text = "D_" + std::to_string(2 * m);
    return FinGroup::dihedral(m);
  }
  if (kind == "table") {
    auto t = get<std::vector<std::vector<int>>>(p, "table", "pi0");
    std::vector<std::string> labels;
    if (p.contains("labels")) labels = get<std::vector<std::string>>(p, "labels", "pi0");
    try {
      auto g = FinGroup::from_table(std::move(t), "", std::move(labels));
      text = "order " + std::to_string(g->size()) + " group";
      return g;
    } catch (const InvalidTable& e) {
      throw InvalidSpec(std::string("pi0: ") + e.what());
    }
  }
  throw InvalidSpec("pi0: unknown kind \"" + kind + "\"");
}

std::string fmt_args(const std::vector<int>& a) {
  std::string s = "(";
  for (std::size_t i = 0; i < a.size(); ++i) s += (i ? "," : "") + std::to_string(a[i]);
  return s + ")";
}

}  // namespace

LoadedSpec parse_spec(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("malformed JSON: ") + e.what());
  }
  if (!j.is_object()) throw ParseError("top level must be an object");

  LoadedSpec out;
  out.name = j.value("name", std::string("unnamed"));
  if (!j.contains("pi0")) throw ParseError("missing \"pi0\"");
  auto g = build_group(j.at("pi0"), out.pi0);

  std::vector<long> factors;
  if (j.contains("pi1")) factors = get<std::vector<long>>(j, "pi1", "spec");
  for (long f : factors)
    if (f < 1) throw InvalidSpec("pi1: factors must be positive");
  out.pi1 = join_factors(factors);

  std::vector<std::pair<int, IntMatrix>> gens;
  if (j.contains("action")) {
    if (!j.at("action").is_array()) throw ParseError("\"action\" must be an array");
    for (const auto& a : j.at("action")) {
      const int e = get<int>(a, "element", "action");
      if (e < 0 || e >= g->size()) throw InvalidSpec("action: element " + std::to_string(e) + " out of range");
      gens.emplace_back(e, get<IntMatrix>(a, "matrix", "action"));
    }
  }
  ModulePtr m;
  try {
    m = gens.empty() ? FinModule::trivial(g, factors) : FinModule::from_generators(g, factors, gens);
  } catch (const InvalidModule& e) {
    throw InvalidSpec(std::string("action: ") + e.what());
  }

  Cochain alpha(g, m, 3);
  if (j.contains("alpha")) {
    if (!j.at("alpha").is_array()) throw ParseError("\"alpha\" must be an array");
    for (const auto& a : j.at("alpha")) {
      auto args = get<std::vector<int>>(a, "args", "alpha");
      auto value = get<std::vector<long>>(a, "value", "alpha");
      if (args.size() != 3) throw InvalidSpec("alpha: args must be a triple");
      for (int x : args)
        if (x < 0 || x >= g->size()) throw InvalidSpec("alpha: element " + std::to_string(x) + " out of range");
      if (static_cast<int>(value.size()) != m->rank())
        throw InvalidSpec("alpha" + fmt_args(args) + ": value needs " + std::to_string(m->rank()) + " coordinates");
      const auto v = m->reduce(value);
      for (int x : args)
        if (x == g->identity() && !m->is_zero(v))
          throw InvalidSpec("alpha" + fmt_args(args) + " must vanish: alpha is normalized");
      alpha.set(args, v);
    }
  }

  auto tg = SpecialTwoGroup::create(g, m, alpha, false, out.name);
  if (auto q = tg->pentagon_failure()) {
    const auto& x = *q;
    const int a = x[0], b = x[1], c = x[2], d = x[3];
    std::ostringstream s;
    s << "alpha is not a 3-cocycle: pentagon fails at " << fmt_args(x) << ", involving alpha at "
      << fmt_args({b, c, d}) << " " << fmt_args({g->mul(a, b), c, d}) << " " << fmt_args({a, g->mul(b, c), d})
      << " " << fmt_args({a, b, g->mul(c, d)}) << " " << fmt_args({a, b, c});
    throw InvalidSpec(s.str());
  }
  out.tg = tg;

  out.order = j.contains("scalar_order") ? get<long>(j, "scalar_order", "spec") : 4;
  if (out.order < 1) throw InvalidSpec("scalar_order must be positive");
  return out;
}

LoadedSpec load_spec(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot read " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_spec(buf.str());
}

Caps Caps::from_env() {
  Caps c;
  if (const char* s = std::getenv("TWOREP_CAPS")) c.apply(s);
  return c;
}

void Caps::apply(const std::string& spec) {
  std::stringstream ss(spec);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    const auto eq = item.find('=');
    if (eq == std::string::npos) throw ParseError("TWOREP_CAPS: expected key=value, got \"" + item + "\"");
    const std::string key = item.substr(0, eq), val = item.substr(eq + 1);
    double v = 0;
    try {
      std::size_t used = 0;
      v = std::stod(val, &used);
      if (used != val.size()) throw std::invalid_argument(val);
    } catch (const std::exception&) {
      throw ParseError("TWOREP_CAPS: bad number \"" + val + "\"");
    }
    if (key == "group")
      group = static_cast<int>(v);
    else if (key == "dim")
      dim = static_cast<int>(v);
    else if (key == "order")
      order = static_cast<long>(v);
    else if (key == "rows")
      rows = v;
    else
      throw ParseError("TWOREP_CAPS: unknown key \"" + key + "\"");
  }
}

// ---------------------------------------------------------------- quadruples

json quadruple_to_json(const RepQuadruple& q) {
  json rho = json::array();
  for (const auto& p : q.rho) rho.push_back(p.images());
  json beta = json::array();
  for (const auto& x : q.beta.images()) beta.push_back(x);
  json c = json::array();
  for (std::size_t t = 0; t < q.c.tuple_count(); ++t) {
    auto v = q.c.value_at(t);
    if (!q.c.module()->is_zero(v)) c.push_back({{"args", q.c.tuple(t)}, {"value", v}});
  }
  return {{"n", q.n}, {"order", q.order}, {"rho", rho}, {"beta", beta}, {"c", c}};
}

RepQuadruple quadruple_from_json(const json& j, const SpecialTwoGroup& tg) {
  const auto& g = tg.G();
  RepQuadruple q{0, 1, {}, trivial_morphism(tg.M(), tg.M()), Cochain(g, tg.M(), 2)};
  try {
    q.n = j.at("n").get<int>();
    q.order = j.at("order").get<long>();
    const auto rho = j.at("rho").get<std::vector<std::vector<int>>>();
    if (static_cast<int>(rho.size()) != g->size()) throw InvalidQuadruple("rho needs one permutation per element");
    for (const auto& p : rho) {
      if (static_cast<int>(p.size()) != q.n) throw InvalidQuadruple("rho permutation has the wrong size");
      q.rho.emplace_back(p);
    }
    if (!is_perm_rep(*g, q.rho)) throw InvalidQuadruple("rho is not a homomorphism");
    auto target = rep_module(g, q.rho, q.order);
    q.beta = ModuleMorphism(tg.M(), target, j.at("beta").get<std::vector<ModElem>>());
    q.c = Cochain(g, target, 2);
    for (const auto& e : j.at("c")) q.c.set(e.at("args").get<std::vector<int>>(), e.at("value").get<ModElem>());
  } catch (const json::exception& e) {
    throw ParseError(std::string("quadruple: ") + e.what());
  }
  auto problems = validate_quadruple(q, tg);
  if (!problems.empty()) throw InvalidQuadruple(problems.front());
  return q;
}

}  // namespace tworep::cli
