#include <cmath>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>

#include "tworep_cli/cli.hpp"

namespace tworep::cli {

using nlohmann::json;

namespace {

// Maps library and CLI errors onto exit codes; `fn` returns the success code.
template <class Fn>
int guarded(std::ostream& err, Fn&& fn) {
  try {
    return fn();
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kParse;
  } catch (const CapExceeded& e) {
    err << "cap exceeded: " << e.what() << "\n";
    return kCaps;
  } catch (const IndexOutOfRange& e) {
    err << "error: " << e.what() << "\n";
    return kIndex;
  } catch (const Error& e) {
    err << "invalid: " << e.what() << "\n";
    return kInvalid;
  }
}

std::string elem_list(const ModElem& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s + ")";
}

std::string rho_text(const RepQuadruple& q) {
  const auto& g = *q.c.group();
  if (g.generators().empty()) return "-";
  std::string s;
  for (int x : g.generators()) s += (s.empty() ? "" : " ") + g.label(x) + ":" + q.rho[x].cycles();
  return s;
}

std::string beta_text(const RepQuadruple& q) {
  if (q.beta.images().empty()) return "-";
  std::string s;
  for (const auto& v : q.beta.images()) s += (s.empty() ? "" : " ") + elem_list(v);
  return s;
}

// left-aligned columns sized to their widest cell; the last column is not padded
void print_table(std::ostream& out, const std::vector<std::vector<std::string>>& rows) {
  std::vector<std::size_t> w;
  for (const auto& r : rows)
    for (std::size_t c = 0; c < r.size(); ++c) {
      if (w.size() <= c) w.push_back(0);
      w[c] = std::max(w[c], r[c].size());
    }
  for (const auto& r : rows) {
    for (std::size_t c = 0; c < r.size(); ++c) {
      out << r[c];
      if (c + 1 < r.size()) out << std::string(w[c] - r[c].size() + 2, ' ');
    }
    out << "\n";
  }
}

void check_caps(const LoadedSpec& spec, int max_dim, bool all, const Caps& caps) {
  const auto& g = *spec.tg->G();
  if (g.size() > caps.group)
    throw CapExceeded("|pi0| = " + std::to_string(g.size()) + " > group cap " + std::to_string(caps.group));
  if (max_dim > caps.dim)
    throw CapExceeded("max-dim " + std::to_string(max_dim) + " > dim cap " + std::to_string(caps.dim));
  if (spec.order > caps.order)
    throw CapExceeded("scalar order " + std::to_string(spec.order) + " > order cap " + std::to_string(caps.order));
  // crude upper bound on enumerated rows: |S_n|^gens * N^(n rank) * cochains
  double rows = 0;
  const double gens = static_cast<double>(g.generators().size());
  const int rank = spec.tg->M()->rank();
  for (int n = 1; n <= max_dim; ++n) {
    const double perms = std::tgamma(n + 1.0);
    double r = std::pow(perms, gens) * std::pow(static_cast<double>(spec.order), n * rank);
    if (all) r *= std::min(4096.0, std::pow(static_cast<double>(spec.order), n * (g.size() - 1.0) * (g.size() - 1.0)));
    rows += r;
  }
  if (rows > caps.rows) {
    std::ostringstream s;
    s << "estimated " << std::setprecision(3) << rows << " rows > rows cap " << caps.rows;
    throw CapExceeded(s.str());
  }
}

struct Row {
  std::size_t cls = 0;
  int dim = 0;
  std::size_t members = 0;
  std::optional<RepQuadruple> q;
};

std::vector<Row> classify_rows(const LoadedSpec& spec, const ClassifyOptions& opt) {
  auto classes = pi0_rep(*spec.tg, opt.max_dim, spec.order);
  std::vector<Row> rows;
  if (!opt.all) {
    for (std::size_t k = 0; k < classes.size(); ++k)
      rows.push_back(Row{k, classes[k].dim, classes[k].members, classes[k].representative});
    return rows;
  }
  rows.push_back(Row{0, 0, 1, std::nullopt});
  for (int n = 1; n <= opt.max_dim; ++n)
    for (auto& q : enumerate_reps(*spec.tg, n, spec.order, EnumMode::All)) {
      Row r{0, n, 0, q};
      for (std::size_t k = 0; k < classes.size(); ++k)
        if (classes[k].dim == n && equivalent_quadruples(*classes[k].representative, q)) {
          r.cls = k;
          break;
        }
      rows.push_back(std::move(r));
    }
  return rows;
}

json header_json(const LoadedSpec& spec) {
  return {{"name", spec.name}, {"pi0", spec.pi0}, {"pi1", spec.pi1}, {"order", spec.order}};
}

}  // namespace

int cmd_validate(const std::string& path, Format fmt, std::ostream& out, std::ostream& err) {
  try {
    auto spec = load_spec(path);
    const auto& alpha = spec.tg->alpha();
    std::string cls = "trivial";
    if (!alpha.is_zero()) cls = solve_coboundary_equation(alpha) ? "cohomologically trivial" : "nontrivial class";
    if (fmt == Format::Json) {
      json j = header_json(spec);
      j["valid"] = true;
      j["pi0_order"] = spec.tg->G()->size();
      j["alpha"] = cls;
      out << j.dump(2) << "\n";
    } else {
      out << "valid; pi0=" << spec.pi0 << ", pi1=" << spec.pi1 << ", alpha " << cls << "\n";
      out << "  group table      ok (order " << spec.tg->G()->size() << ")\n";
      out << "  module action    ok\n";
      out << "  alpha normalized ok\n";
      out << "  pentagon         ok\n";
      out << "  scalar order     " << spec.order << "\n";
    }
    return kOk;
  } catch (const Error& e) {
    if (fmt == Format::Json) out << json{{"valid", false}, {"error", e.what()}}.dump(2) << "\n";
    return guarded(err, [&]() -> int { throw; });
  }
}

int cmd_classify(const std::string& path, const ClassifyOptions& opt, const Caps& caps, Format fmt, std::ostream& out,
                 std::ostream& err) {
  return guarded(err, [&] {
    if (opt.max_dim < 0) throw ParseError("--max-dim must be non-negative");
    auto spec = load_spec(path);
    check_caps(spec, opt.max_dim, opt.all, caps);
    auto rows = classify_rows(spec, opt);

    if (fmt == Format::Json) {
      json j = header_json(spec);
      j["max_dim"] = opt.max_dim;
      j["mode"] = opt.all ? "all" : "canonical";
      json qs = json::array();
      for (std::size_t k = 0; k < rows.size(); ++k) {
        json r = {{"index", k}, {"class", rows[k].cls}, {"dim", rows[k].dim}};
        if (!opt.all) r["members"] = rows[k].members;
        r["quadruple"] = rows[k].q ? quadruple_to_json(*rows[k].q) : json(nullptr);
        qs.push_back(r);
      }
      j["quadruples"] = qs;
      out << j.dump(2) << "\n";
      return kOk;
    }

    out << spec.name << ": pi0=" << spec.pi0 << ", pi1=" << spec.pi1 << ", N=" << spec.order << ", max-dim "
        << opt.max_dim << ", mode " << (opt.all ? "all" : "canonical") << "\n";
    std::vector<std::vector<std::string>> table{{"idx", "class", "dim", "rho", "beta", "c"}};
    for (std::size_t k = 0; k < rows.size(); ++k) {
      const auto& r = rows[k];
      table.push_back({std::to_string(k), std::to_string(r.cls), std::to_string(r.dim), r.q ? rho_text(*r.q) : "-",
                       r.q ? beta_text(*r.q) : "-", r.q ? r.q->c.to_string() : "-"});
    }
    print_table(out, table);
    std::size_t classes = 0;
    for (const auto& r : rows) classes = std::max(classes, r.cls + 1);
    out << "classes: " << classes << ", rows: " << rows.size() << "\n";
    return kOk;
  });
}

int cmd_homcat(const std::string& path, const HomcatOptions& opt, const Caps& caps, Format fmt, std::ostream& out,
               std::ostream& err) {
  return guarded(err, [&] {
    auto spec = load_spec(path);
    std::vector<std::optional<RepQuadruple>> reps;
    if (opt.reps_file) {
      std::ifstream in(*opt.reps_file);
      if (!in) throw ParseError("cannot read " + *opt.reps_file);
      json j;
      try {
        j = json::parse(in);
      } catch (const json::parse_error& e) {
        throw ParseError(std::string("malformed JSON: ") + e.what());
      }
      if (!j.contains("quadruples") || !j.at("quadruples").is_array())
        throw ParseError(*opt.reps_file + ": missing \"quadruples\" array");
      for (const auto& r : j.at("quadruples")) {
        if (!r.contains("quadruple")) throw ParseError("row without \"quadruple\"");
        const auto& q = r.at("quadruple");
        reps.push_back(q.is_null() ? std::nullopt : std::optional(quadruple_from_json(q, *spec.tg)));
      }
    } else {
      check_caps(spec, opt.max_dim, false, caps);
      for (auto& c : pi0_rep(*spec.tg, opt.max_dim, spec.order)) reps.push_back(c.representative);
    }
    auto pick = [&](int k, const char* what) -> const std::optional<RepQuadruple>& {
      if (k < 0 || k >= static_cast<int>(reps.size()))
        throw IndexOutOfRange(std::string(what) + " index " + std::to_string(k) + " not in 0.." +
                              std::to_string(reps.size() - 1));
      return reps[k];
    };
    const auto& src = pick(opt.source, "source");
    const auto& tgt = pick(opt.target, "target");

    HomSummary s;
    if (!src || !tgt) {
      s.terminal = true;
      s.statement = "terminal (zero representation)";
    } else {
      s = hom_category_summary(*src, *tgt);
    }
    const auto& g = *spec.tg->G();

    if (fmt == Format::Json) {
      json orbits = json::array();
      for (const auto& o : s.orbits) {
        json pts = json::array();
        for (auto [ip, i] : o.points) pts.push_back({ip, i});
        json z = nullptr;
        if (o.z) {
          z = json::array();
          for (std::size_t t = 0; t < o.z->tuple_count(); ++t) {
            auto v = o.z->value_at(t);
            if (!o.z->module()->is_zero(v)) z.push_back({{"args", o.z->tuple(t)}, {"value", v}});
          }
        }
        orbits.push_back({{"points", pts},
                          {"intertwining", o.intertwining},
                          {"stabilizer", o.stabilizer},
                          {"z", z},
                          {"z_closed", o.z_closed},
                          {"z_trivial", o.z_trivial}});
      }
      json j = {{"source", opt.source},   {"target", opt.target},         {"terminal", s.terminal},
                {"orbits", orbits},       {"statement", s.statement}};
      out << j.dump(2) << "\n";
      return kOk;
    }

    out << "source [" << opt.source << "] " << (src ? describe(*src) : "zero representation") << "\n";
    out << "target [" << opt.target << "] " << (tgt ? describe(*tgt) : "zero representation") << "\n";
    if (!s.orbits.empty()) {
      std::vector<std::vector<std::string>> table{{"orbit", "size", "intertwining", "stabilizer", "z_O"}};
      for (std::size_t k = 0; k < s.orbits.size(); ++k) {
        const auto& o = s.orbits[k];
        std::string stab = "{";
        for (std::size_t i = 0; i < o.stabilizer.size(); ++i) stab += (i ? "," : "") + g.label(o.stabilizer[i]);
        stab += "}";
        std::string z = "-";
        if (o.z) z = std::string(o.z_trivial ? "trivial" : "nontrivial") + (o.z_closed ? "" : " (not closed)");
        table.push_back({std::to_string(k), std::to_string(o.points.size()), o.intertwining ? "yes" : "no", stab, z});
      }
      print_table(out, table);
    }
    out << "terminal: " << (s.terminal ? "yes" : "no") << "\n";
    out << "statement: " << s.statement << "\n";
    return kOk;
  });
}

}  // namespace tworep::cli
