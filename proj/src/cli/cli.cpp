#include "cellres/cli/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iomanip>
#include <optional>
#include <sstream>

#include "cellres/arrangement/arrangement.hpp"
#include "cellres/core/matroid.hpp"
#include "cellres/error.hpp"
#include "cellres/graphs/arrangements.hpp"
#include "cellres/graphs/hermite.hpp"
#include "cellres/graphs/invariants.hpp"
#include "cellres/graphs/multigraph.hpp"
#include "cellres/ideals/ideal.hpp"
#include "cellres/resolution/complex.hpp"
#include "cellres/resolution/lattice.hpp"
#include "cellres/toric/toric.hpp"

namespace cellres::cli {

namespace {

using json = nlohmann::ordered_json;
using core::BigInt;

struct GlobalFlags {
  bool json = false;
  bool check = false;
  bool timing = false;
};

struct Entry {
  std::string name;
  json value;
  std::string text;
};

struct Report {
  std::string command;
  std::string source;
  std::string digest;
  std::vector<Entry> entries;
  bool agreement = true;
  bool compared = false;
  std::string disagreement;

  void add(std::string name, json value, std::string text) {
    entries.push_back({std::move(name), std::move(value), std::move(text)});
  }

  /// All entries whose name is in `names` must carry equal values.
  void require_equal(const std::vector<std::string>& names) {
    const json* first = nullptr;
    std::string first_name;
    std::size_t seen = 0;
    for (const auto& n : names) {
      for (const auto& e : entries) {
        if (e.name != n) continue;
        ++seen;
        if (!first) {
          first = &e.value;
          first_name = n;
        } else if (e.value != *first && agreement) {
          agreement = false;
          disagreement = first_name + " and " + n + " differ";
        }
      }
    }
    if (seen > 1) compared = true;
  }

  /// Records the outcome of a self-consistency check.
  void require(bool ok, const std::string& what) {
    compared = true;
    if (!ok && agreement) {
      agreement = false;
      disagreement = what;
    }
  }
};

std::string fnv1a(const std::string& text) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : text) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  std::ostringstream s;
  s << "fnv1a64:" << std::hex << std::setw(16) << std::setfill('0') << h;
  return s.str();
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError(0, "cannot open " + path);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

json big(const BigInt& z) {
  if (z.fits_slong_p()) return z.get_si();
  return z.get_str();
}

json big_list(const std::vector<BigInt>& v) {
  json a = json::array();
  for (const auto& z : v) a.push_back(big(z));
  return a;
}

template <typename T>
std::string list_text(const std::vector<T>& v) {
  std::string s = "[";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ", ";
    if constexpr (std::is_same_v<T, BigInt>) {
      s += v[i].get_str();
    } else {
      s += std::to_string(v[i]);
    }
  }
  return s + "]";
}

std::string join(const std::vector<std::string>& parts, const std::string& sep) {
  std::string s;
  for (std::size_t i = 0; i < parts.size(); ++i) s += (i ? sep : "") + parts[i];
  return s;
}

std::vector<std::size_t> one_based(const std::vector<std::size_t>& v) {
  std::vector<std::size_t> out;
  for (auto i : v) out.push_back(i + 1);
  return out;
}

json polynomial_json(const core::IntPolynomial1& p, const std::string& var) {
  return json{{"coefficients", big_list(p.coefficients())}, {"text", p.to_string(var)}};
}

json polynomial_json(const core::IntPolynomial2& p, const std::string& xvar, const std::string& yvar) {
  json terms = json::array();
  for (const auto& [e, c] : p.terms()) terms.push_back(json::array({e.first, e.second, big(c)}));
  return json{{"terms", std::move(terms)}, {"text", p.to_string(xvar, yvar)}};
}

json ideal_json(const ideals::MonomialIdeal& ideal) {
  json gens = json::array();
  for (const auto& g : ideal.generators()) gens.push_back(ideals::to_string(g, ideal.universe()));
  return gens;
}

json exponents_json(const ideals::Monomial& m) {
  json a = json::array();
  for (std::size_t i = 0; i < m.nvars(); ++i) a.push_back(m[i]);
  return a;
}

std::vector<std::size_t> without_ring(std::vector<std::size_t> ranks) {
  if (!ranks.empty()) ranks.erase(ranks.begin());
  return ranks;
}

std::vector<std::size_t> as_sizes(const std::vector<BigInt>& v) {
  std::vector<std::size_t> out;
  for (const auto& z : v) out.push_back(z.get_ui());
  return out;
}

core::RationalVector parse_vector(const std::string& text) {
  core::RationalVector v;
  std::stringstream s(text);
  std::string token;
  while (std::getline(s, token, ',')) {
    const auto r = core::parse_rational(token);
    if (!r) throw ParseError(0, "not a rational number: '" + token + "'");
    v.push_back(*r);
  }
  if (v.empty()) throw ParseError(0, "empty vector");
  return v;
}

std::vector<std::string> parse_labels(const std::string& text, std::size_t n) {
  std::vector<std::string> labels;
  if (text.empty()) return labels;
  std::stringstream s(text);
  std::string token;
  while (std::getline(s, token, ',')) labels.push_back(token);
  if (labels.size() != n) {
    throw ParseError(0, "expected " + std::to_string(n) + " labels, got " + std::to_string(labels.size()));
  }
  return labels;
}

std::string vector_text(const core::RationalVector& v) {
  std::vector<std::string> parts;
  for (const auto& x : v) parts.push_back(core::to_string(x));
  return join(parts, ",");
}

json vector_json(const core::RationalVector& v) {
  json a = json::array();
  for (const auto& x : v) a.push_back(core::to_string(x));
  return a;
}

// ---------------------------------------------------------------- arr

struct ArrArgs {
  std::string file;
  std::string type = "matroid";
  std::string method = "cellular";
};

arrangement::Arrangement load_arrangement(const ArrArgs& args, Report& report) {
  const std::string text = slurp(args.file);
  report.source = args.file;
  report.digest = fnv1a(text);
  return arrangement::parse_arrangement_string(text);
}

void require_general_position(const arrangement::Arrangement& a) {
  if (auto flat = arrangement::nongeneric_flat(arrangement::homogenize(a))) {
    throw NotGeneralPosition(*flat);
  }
}

void arr_bounded(const ArrArgs& args, const GlobalFlags& flags, Report& report) {
  const auto a = load_arrangement(args, report);
  const auto b = arrangement::bounded_complex(a);
  const auto f = b.fvector();
  report.add("fvector", f, list_text(f));

  json vs = json::array();
  std::string vtext;
  for (const auto& v : arrangement::vertices(a)) {
    vs.push_back({{"point", vector_json(v.point)}, {"sign", v.sign.to_string()}});
    vtext += "\n  (" + vector_text(v.point) + ") " + v.sign.to_string();
  }
  report.add("vertices", std::move(vs), vtext);

  json cells = json::array();
  std::string ctext;
  for (const auto& c : b.cells) {
    cells.push_back({{"dim", c.dim}, {"sign", c.sign.to_string()}, {"facets", c.facets}});
    ctext += "\n  " + std::to_string(c.dim) + " " + c.sign.to_string();
  }
  report.add("cells", std::move(cells), ctext);

  if (flags.check) {
    long euler = 0;
    for (std::size_t i = 0; i < f.size(); ++i) euler += (i % 2 ? -1 : 1) * static_cast<long>(f[i]);
    report.add("euler_characteristic", euler, std::to_string(euler));
    report.require(euler == 1, "bounded complex has Euler characteristic " + std::to_string(euler));
    const bool axioms = arrangement::check_covector_axioms(arrangement::covector_closure(arrangement::homogenize(a)));
    report.add("covector_axioms", axioms, axioms ? "true" : "false");
    report.require(axioms, "covector axioms fail");
  }
}

void arr_ideal(const ArrArgs& args, const GlobalFlags& flags, Report& report) {
  const auto a = load_arrangement(args, report);
  const bool oriented = args.type == "oriented";
  const auto ideal = oriented ? ideals::oriented_ideal(a) : ideals::matroid_ideal(a);
  report.add("generators", ideal_json(ideal), ideal.to_string());
  if (flags.check) {
    const auto r = arrangement::homogenize(a);
    const auto primes = oriented ? ideals::prime_decomposition_oriented(r, ideal.universe())
                                 : ideals::basis_decomposition(r, ideal.universe());
    const auto meet = ideals::intersect_primes(primes, ideal.universe());
    report.add("prime_intersection", ideal_json(meet), meet.to_string());
    report.require_equal({"generators", "prime_intersection"});
  }
}

json resolution_json(const resolution::ResolutionReport& r, const ideals::Universe& u) {
  json j{{"exact", r.exact}, {"minimal", r.minimal}, {"betti", r.betti}};
  if (r.witness) j["witness"] = ideals::to_string(*r.witness, u);
  return j;
}

std::string resolution_text(const resolution::ResolutionReport& r, const ideals::Universe& u) {
  std::string s = std::string("exact ") + (r.exact ? "true" : "false") + ", minimal " +
                  (r.minimal ? "true" : "false") + ", betti " + list_text(r.betti);
  if (r.witness) s += ", witness " + ideals::to_string(*r.witness, u);
  return s;
}

void arr_verify(const ArrArgs& args, const GlobalFlags& flags, Report& report) {
  const auto a = load_arrangement(args, report);
  const auto b = arrangement::bounded_complex(a);
  for (const bool oriented : {false, true}) {
    const auto u = oriented ? ideals::Universe::xy_vars(a.size()) : ideals::Universe::x_vars(a.size());
    const auto c = resolution::labeled_bounded_complex(b, u);
    const auto r = resolution::verify_cellular_resolution(c, {.torsion_sentinel = flags.check});
    const std::string name = oriented ? "oriented" : "matroid";
    report.add(name, resolution_json(r, u), resolution_text(r, u));
    if (flags.check) {
      const auto chain = resolution::cellular_complex(c);
      report.require(resolution::diamonds_hold(c), name + ": diamond sign rule fails");
      report.require(resolution::differentials_compose_to_zero(chain), name + ": differentials do not square to zero");
      report.require(resolution::degrees_compatible(chain), name + ": labels are not compatible");
    }
  }
}

void arr_betti(const ArrArgs& args, const GlobalFlags& flags, Report& report) {
  const auto a = load_arrangement(args, report);
  require_general_position(a);
  const bool all = args.method == "all" || flags.check;
  const auto r = arrangement::homogenize(a);
  const core::RowMatroid m(r.rows);
  const auto u = ideals::Universe::x_vars(a.size());
  std::vector<std::string> names;
  if (all || args.method == "cellular") {
    const auto c = resolution::labeled_bounded_complex(arrangement::bounded_complex(a), u);
    const auto betti = without_ring(resolution::cellular_complex(c).ranks());
    report.add("cellular", betti, list_text(betti));
    names.push_back("cellular");
  }
  if (all || args.method == "stanley") {
    const auto betti = without_ring(as_sizes(resolution::stanley_betti(resolution::flat_lattice(m))));
    report.add("stanley", betti, list_text(betti));
    names.push_back("stanley");
  }
  if (all || args.method == "zp") {
    const auto betti = without_ring(resolution::zp_resolution(resolution::matroid_poset(m, u)).ranks());
    report.add("zp", betti, list_text(betti));
    names.push_back("zp");
  }
  report.require_equal(names);
}

void arr_hilbert(const ArrArgs& args, const GlobalFlags& flags, Report& report) {
  const auto a = load_arrangement(args, report);
  const auto b = arrangement::bounded_complex(a);
  const auto u = ideals::Universe::xy_vars(a.size());
  const auto h = ideals::hilbert_numerator(b, u);
  report.add("label_sum", h.to_string(), h.to_string());
  if (flags.check) {
    const auto e = resolution::euler_numerator(resolution::cellular_complex(resolution::labeled_bounded_complex(b, u)));
    report.add("resolution", e.to_string(), e.to_string());
    report.require_equal({"label_sum", "resolution"});
  }
}

// ---------------------------------------------------------------- graph

struct GraphArgs {
  std::string source;
  std::string method;
  std::string side = "graphic";
};

graphs::Multigraph load_graph(const GraphArgs& args, Report& report) {
  report.source = args.source;
  if (std::filesystem::is_regular_file(args.source)) {
    const std::string text = slurp(args.source);
    report.digest = fnv1a(text);
    return graphs::parse_graph_string(text);
  }
  if (args.source.find(':') == std::string::npos) throw ParseError(0, "cannot open " + args.source);
  report.digest = fnv1a(args.source);
  return graphs::parse_family(args.source);
}

void graph_mu(const GraphArgs& args, const GlobalFlags& flags, Report& report) {
  const auto g = load_graph(args, report);
  const bool all = args.method == "all" || flags.check;
  const std::string method = args.method.empty() ? "tutte" : args.method;
  std::vector<std::string> names;
  auto run_method = [&](const std::string& name, graphs::MuMethod m) {
    const BigInt value = graphs::mu(g, m);
    report.add(name, big(value), value.get_str());
    names.push_back(name);
  };
  if (all || method == "tutte") run_method("tutte", graphs::MuMethod::Tutte);
  if ((all && g.vertices <= 12) || method == "orientations") run_method("orientations", graphs::MuMethod::Orientations);
  if ((all && g.vertices <= 8) || method == "order_classes") run_method("order_classes", graphs::MuMethod::OrderClasses);
  report.require_equal(names);
}

void graph_muperp(const GraphArgs& args, const GlobalFlags& flags, Report& report) {
  const auto g = load_graph(args, report);
  const bool all = args.method == "all" || flags.check;
  const std::string method = args.method.empty() ? "tutte" : args.method;
  std::vector<std::string> names;
  auto run_method = [&](const std::string& name, graphs::MuPerpMethod m) {
    const BigInt value = graphs::mu_perp(g, m);
    report.add(name, big(value), value.get_str());
    names.push_back(name);
  };
  if (all || method == "tutte") run_method("tutte", graphs::MuPerpMethod::Tutte);
  if ((all && g.edge_count() <= 18) || method == "forests") run_method("forests", graphs::MuPerpMethod::Forests);
  if (method == "closed") {
    run_method("closed", graphs::MuPerpMethod::ClosedForm);
  } else if (all) {
    try {
      run_method("closed", graphs::MuPerpMethod::ClosedForm);
    } catch (const InvalidArgument&) {
      // no closed form for this graph
    }
  }
  report.require_equal(names);
}

void graph_cochar(const GraphArgs& args, const GlobalFlags& flags, Report& report) {
  const auto g = load_graph(args, report);
  const bool cographic = args.side == "cographic";
  const auto p = cographic ? graphs::cochar_cographic(g) : graphs::cochar_graphic(g);
  report.add("recursion", polynomial_json(p, "q"), p.to_string("q"));
  if (!flags.check) return;

  std::vector<std::string> names{"recursion"};
  const auto lattice = cographic ? graphs::isthmus_free_lattice(g)
                                 : resolution::flat_lattice(core::RowMatroid(graphs::graphic_matrix(g)));
  const auto stanley = resolution::cochar(lattice);
  report.add("lattice", polynomial_json(stanley, "q"), stanley.to_string("q"));
  names.push_back("lattice");

  const auto matrix = cographic ? graphs::cographic_matrix(g) : graphs::graphic_matrix(g);
  std::vector<BigInt> f;
  for (auto count : toric::toric_fvector(matrix, toric::generic_w(matrix))) f.emplace_back(static_cast<unsigned long>(count));
  const core::IntPolynomial1 toric_poly(f);
  report.add("toric", polynomial_json(toric_poly, "q"), toric_poly.to_string("q"));
  names.push_back("toric");
  report.require_equal(names);
}

void graph_tutte(const GraphArgs& args, const GlobalFlags& flags, Report& report) {
  const auto g = load_graph(args, report);
  const auto t = graphs::tutte(g);
  report.add("tutte", polynomial_json(t, "x", "y"), t.to_string());
  if (flags.check && graphs::is_connected(g)) {
    const BigInt at10 = t.evaluate(1, 0);
    report.add("mu_from_tutte", big(at10), at10.get_str());
    if (g.vertices <= 12) {
      const BigInt orientations = graphs::mu(g, graphs::MuMethod::Orientations);
      report.add("mu_from_orientations", big(orientations), orientations.get_str());
      report.require_equal({"mu_from_tutte", "mu_from_orientations"});
    }
  }
}

// ---------------------------------------------------------------- toric

struct ToricArgs {
  std::string file;
  std::string w = "auto";
  std::string labels;
  long seed = 2;
};

core::RationalMatrix load_matrix(const ToricArgs& args, Report& report) {
  const std::string text = slurp(args.file);
  report.source = args.file;
  report.digest = fnv1a(text);
  return toric::parse_matrix_string(text);
}

core::RationalVector choose_w(const core::RationalMatrix& b, const ToricArgs& args, Report& report) {
  const auto w = args.w == "auto" ? toric::generic_w(b, args.seed) : parse_vector(args.w);
  report.add("w", vector_json(w), vector_text(w));
  return w;
}

ideals::Universe xy_universe(const core::RationalMatrix& b, const ToricArgs& args) {
  return ideals::Universe::xy_vars(b.rows(), parse_labels(args.labels, b.rows()));
}

void toric_fvector(const ToricArgs& args, const GlobalFlags& flags, Report& report) {
  const auto b = load_matrix(args, report);
  const auto w = choose_w(b, args, report);
  const auto f = toric::toric_fvector(b, w);
  report.add("fvector", f, list_text(f));
  if (flags.check) {
    const auto betti = as_sizes(resolution::stanley_betti(resolution::flat_lattice(core::RowMatroid(b))));
    report.add("lattice", betti, list_text(betti));
    report.require_equal({"fvector", "lattice"});
    long euler = 0;
    for (std::size_t i = 0; i < f.size(); ++i) euler += (i % 2 ? -1 : 1) * static_cast<long>(f[i]);
    report.require(euler == 0, "toric Euler characteristic is " + std::to_string(euler));
  }
}

void toric_circuits(const ToricArgs& args, const GlobalFlags& flags, Report& report) {
  const auto b = load_matrix(args, report);
  const auto u = xy_universe(b, args);
  const auto circuits = toric::signed_circuits(b);
  const auto binomials = toric::lawrence_generators(b, u);
  json cj = json::array();
  json bj = json::array();
  std::string text;
  for (std::size_t i = 0; i < circuits.size(); ++i) {
    cj.push_back({{"plus", one_based(circuits[i].positive)}, {"minus", one_based(circuits[i].negative)}});
    bj.push_back({{"plus", exponents_json(binomials[i].plus)}, {"minus", exponents_json(binomials[i].minus)}});
    text += "\n  " + circuits[i].to_string() + "  " + toric::to_string(binomials[i], u);
  }
  report.add("count", circuits.size(), std::to_string(circuits.size()));
  report.add("circuits", std::move(cj), text);
  report.add("binomials", std::move(bj), "");
  if (flags.check) report.require(toric::is_unimodular(b), "matrix is not unimodular");
}

void toric_initial(const ToricArgs& args, const GlobalFlags& flags, Report& report) {
  const auto b = load_matrix(args, report);
  const auto u = xy_universe(b, args);
  const auto w = choose_w(b, args, report);
  const auto ideal = toric::initial_ideal(b, w, u);
  report.add("generators", ideal_json(ideal), ideal.to_string());
  if (flags.check) {
    const auto primes = ideals::prime_decomposition_oriented({b, w}, u);
    const auto meet = ideals::intersect_primes(primes, u);
    report.add("prime_intersection", ideal_json(meet), meet.to_string());
    report.require_equal({"generators", "prime_intersection"});
    report.add("primes", primes.size(), std::to_string(primes.size()));
    const std::size_t bases = core::RowMatroid(b).bases().size();
    report.require(primes.size() == bases, "minimal primes do not match the bases");
  }
}

// ---------------------------------------------------------------- hermite

struct HermiteArgs {
  int n = 0;
  int m = 0;
  std::vector<long> at;
};

void hermite1(const HermiteArgs& args, const GlobalFlags& flags, Report& report) {
  report.source = "hermite " + std::to_string(args.n);
  report.digest = fnv1a(report.source);
  if (args.n < 0) throw InvalidArgument("n must be nonnegative");
  if (args.at.size() > 1) throw InvalidArgument("--at takes one value");
  const auto h = graphs::hermite(args.n);
  const auto emit = [&](const std::string& name, const core::IntPolynomial1& p) {
    if (args.at.empty()) {
      report.add(name, polynomial_json(p, "x"), p.to_string("x"));
    } else {
      const BigInt v = p.evaluate(args.at.front());
      report.add(name, big(v), v.get_str());
    }
  };
  emit("recurrence", h);
  if (flags.check) {
    emit("explicit", graphs::hermite_explicit(args.n));
    report.require_equal({"recurrence", "explicit"});
  }
}

void hermite2(const HermiteArgs& args, const GlobalFlags& flags, Report& report) {
  report.source = "hermite2 " + std::to_string(args.m) + " " + std::to_string(args.n);
  report.digest = fnv1a(report.source);
  if (args.m < 0 || args.n < 0) throw InvalidArgument("m and n must be nonnegative");
  if (!args.at.empty() && args.at.size() != 2) throw InvalidArgument("--at takes two values");
  const auto emit = [&](const std::string& name, const core::IntPolynomial2& p) {
    if (args.at.empty()) {
      report.add(name, polynomial_json(p, "x", "y"), p.to_string());
    } else {
      const BigInt v = p.evaluate(args.at[0], args.at[1]);
      report.add(name, big(v), v.get_str());
    }
  };
  emit("recurrence", graphs::hermite2(args.m, args.n));
  if (flags.check) {
    emit("explicit", graphs::hermite2_explicit(args.m, args.n));
    emit("symmetry", graphs::hermite2(args.n, args.m).swapped());
    report.require_equal({"recurrence", "explicit", "symmetry"});
  }
}

// ---------------------------------------------------------------- output

void write_report(const Report& report, const GlobalFlags& flags, std::optional<double> millis,
                  std::ostream& out) {
  if (flags.json) {
    json results = json::object();
    for (const auto& e : report.entries) results[e.name] = e.value;
    json j{{"command", report.command},
           {"input", {{"source", report.source}, {"digest", report.digest}}},
           {"results", std::move(results)},
           {"agreement", report.agreement}};
    if (millis) j["timing_ms"] = *millis;
    out << j.dump(2) << '\n';
    return;
  }
  for (const auto& e : report.entries) {
    if (e.text.empty()) continue;
    out << e.name << ':' << (e.text.front() == '\n' ? "" : " ") << e.text << '\n';
  }
  if (report.compared) out << "agreement: " << (report.agreement ? "true" : "false") << '\n';
  if (millis) out << "time: " << std::fixed << std::setprecision(3) << *millis << " ms\n";
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Monomial ideals, cellular resolutions and Moebius invariants of arrangements", "cellres"};
  app.require_subcommand(1);
  GlobalFlags flags;
  ArrArgs arr_args;
  GraphArgs graph_args;
  ToricArgs toric_args;
  HermiteArgs hermite_args;

  const auto common = [&](CLI::App* c) {
    c->add_flag("--json", flags.json, "Print a JSON report");
    c->add_flag("--check", flags.check, "Run every applicable independent method and compare");
    c->add_flag("--timing", flags.timing, "Report the wall-clock time");
  };
  common(&app);

  std::vector<std::pair<CLI::App*, std::function<void(Report&)>>> leaves;
  const auto leaf = [&](CLI::App* parent, const std::string& name, const std::string& description,
                        std::function<void(Report&)> action) {
    auto* c = parent->add_subcommand(name, description);
    common(c);
    leaves.emplace_back(c, std::move(action));
    return c;
  };

  auto* arr = app.add_subcommand("arr", "Affine hyperplane arrangements");
  arr->require_subcommand(1);
  leaf(arr, "bounded", "Bounded complex: f-vector, vertices and cells",
       [&](Report& r) { arr_bounded(arr_args, flags, r); })
      ->add_option("file", arr_args.file, "Arrangement file")->required();
  auto* ideal = leaf(arr, "ideal", "Matroid or oriented matroid ideal",
                     [&](Report& r) { arr_ideal(arr_args, flags, r); });
  ideal->add_option("file", arr_args.file, "Arrangement file")->required();
  ideal->add_option("--type", arr_args.type, "matroid or oriented")
      ->check(CLI::IsMember({"matroid", "oriented"}));
  leaf(arr, "verify", "Check that the bounded complex resolves both ideals",
       [&](Report& r) { arr_verify(arr_args, flags, r); })
      ->add_option("file", arr_args.file, "Arrangement file")->required();
  auto* betti = leaf(arr, "betti", "Betti numbers of the matroid ideal",
                     [&](Report& r) { arr_betti(arr_args, flags, r); });
  betti->add_option("file", arr_args.file, "Arrangement file")->required();
  betti->add_option("--method", arr_args.method, "cellular, stanley, zp or all")
      ->check(CLI::IsMember({"cellular", "stanley", "zp", "all"}));
  leaf(arr, "hilbert", "Numerator of the multigraded Hilbert series of the oriented ideal",
       [&](Report& r) { arr_hilbert(arr_args, flags, r); })
      ->add_option("file", arr_args.file, "Arrangement file")->required();

  auto* graph = app.add_subcommand("graph", "Graph invariants (file or family such as Km:5, Kmn:3,3, Cn:6)");
  graph->require_subcommand(1);
  auto* mu = leaf(graph, "mu", "Moebius invariant of the graphic lattice",
                  [&](Report& r) { graph_mu(graph_args, flags, r); });
  mu->add_option("graph", graph_args.source, "Graph file or family")->required();
  mu->add_option("--method", graph_args.method, "tutte, orientations, order_classes or all")
      ->check(CLI::IsMember({"tutte", "orientations", "order_classes", "all"}));
  auto* muperp = leaf(graph, "muperp", "Moebius invariant of the cographic lattice",
                      [&](Report& r) { graph_muperp(graph_args, flags, r); });
  muperp->add_option("graph", graph_args.source, "Graph file or family")->required();
  muperp->add_option("--method", graph_args.method, "tutte, forests, closed or all")
      ->check(CLI::IsMember({"tutte", "forests", "closed", "all"}));
  auto* cochar = leaf(graph, "cochar", "Cocharacteristic polynomial",
                      [&](Report& r) { graph_cochar(graph_args, flags, r); });
  cochar->add_option("graph", graph_args.source, "Graph file or family")->required();
  cochar->add_option("--side", graph_args.side, "graphic or cographic")
      ->check(CLI::IsMember({"graphic", "cographic"}));
  leaf(graph, "tutte", "Tutte polynomial", [&](Report& r) { graph_tutte(graph_args, flags, r); })
      ->add_option("graph", graph_args.source, "Graph file or family")->required();

  auto* toric = app.add_subcommand("toric", "Unimodular toric arrangements");
  toric->require_subcommand(1);
  const auto toric_options = [&](CLI::App* c, bool with_w, bool with_labels) {
    c->add_option("file", toric_args.file, "Matrix file")->required();
    if (with_w) {
      c->add_option("--w", toric_args.w, "Comma-separated functional, or auto");
      c->add_option("--seed-w", toric_args.seed, "Start t of the search w = (1, t, t^2, ...)")
          ->check(CLI::PositiveNumber);
    }
    if (with_labels) c->add_option("--labels", toric_args.labels, "Comma-separated row labels");
  };
  toric_options(leaf(toric, "fvector", "f-vector of the toric arrangement",
                     [&](Report& r) { toric_fvector(toric_args, flags, r); }),
                true, false);
  toric_options(leaf(toric, "circuits", "Signed circuits and Lawrence binomials",
                     [&](Report& r) { toric_circuits(toric_args, flags, r); }),
                false, true);
  toric_options(leaf(toric, "initial", "Initial ideal of the Lawrence ideal",
                     [&](Report& r) { toric_initial(toric_args, flags, r); }),
                true, true);

  auto* h1 = leaf(&app, "hermite", "Hermite polynomial H_n(x)", [&](Report& r) { hermite1(hermite_args, flags, r); });
  h1->add_option("n", hermite_args.n)->required();
  h1->add_option("--at", hermite_args.at, "Evaluate at an integer x")->expected(1);
  auto* h2 = leaf(&app, "hermite2", "Two-variable Hermite polynomial H_{m,n}(x, y)",
                  [&](Report& r) { hermite2(hermite_args, flags, r); });
  h2->add_option("m", hermite_args.m)->required();
  h2->add_option("n", hermite_args.n)->required();
  h2->add_option("--at", hermite_args.at, "Evaluate at integers x y")->expected(2);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return e.get_exit_code() == static_cast<int>(CLI::ExitCodes::Success) ? code : kParseError;
  }

  Report report;
  report.command = join(args, " ");
  try {
    const auto start = std::chrono::steady_clock::now();
    for (auto& [c, action] : leaves) {
      if (c->parsed()) action(report);
    }
    std::optional<double> millis;
    if (flags.timing) {
      millis = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    }
    write_report(report, flags, millis, out);
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << '\n';
    return kParseError;
  } catch (const GenericityFailure& e) {
    err << "precondition failed: " << e.what() << '\n';
    if (!toric_args.file.empty()) {
      try {
        const auto b = toric::parse_matrix_string(slurp(toric_args.file));
        err << "try --w " << vector_text(toric::generic_w(b, toric_args.seed)) << '\n';
      } catch (const Error&) {
        // no suggestion available
      }
    }
    return kPreconditionFailure;
  } catch (const PreconditionError& e) {
    err << "precondition failed: " << e.what() << '\n';
    return kPreconditionFailure;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kFailure;
  }
  if (!report.agreement) {
    err << "METHOD DISAGREEMENT: " << report.disagreement << '\n';
    return kDisagreement;
  }
  return kSuccess;
}

}  // namespace cellres::cli
