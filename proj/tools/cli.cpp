#include "cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <functional>
#include <map>
#include <nlohmann/json.hpp>
#include <optional>
#include <ostream>
#include <sstream>

#include "axial/axet.hpp"
#include "axial/decompose.hpp"
#include "axial/error.hpp"
#include "axial/groebner.hpp"
#include "axial/io.hpp"
#include "axial/matsuo.hpp"
#include "axial/search.hpp"

namespace axial::cli {
namespace {

using json = nlohmann::ordered_json;

json to_json(const Rat& x) { return to_string(x); }
json to_json(const Vec& v) {
  json a = json::array();
  for (const auto& x : v) a.push_back(to_string(x));
  return a;
}
json to_json(const Subspace& s) {
  json a = json::array();
  for (const auto& b : s.basis()) a.push_back(to_json(b));
  return a;
}

std::string dims_of(const Axis& a) {
  std::string s;
  for (const auto& p : a.eigen) {
    if (!s.empty()) s += " ";
    s += to_string(p.lambda) + ":" + std::to_string(p.space.dim());
  }
  return s;
}

struct Options {
  std::string file;
  std::optional<std::string> length;
  std::optional<std::string> law;
  std::optional<std::string> caps;
  std::uint64_t seed = 1;
  std::vector<std::size_t> y;
  std::optional<std::string> reference;
  std::optional<std::string> out;
  std::string eta = "1/4";
  std::string sigma;
  std::vector<std::string> probes;
  std::vector<std::string> w;
  std::size_t retries = 8;
};

// Human lines plus the structured document; flushed even on a cap failure
// so partial results survive.
struct Report {
  std::string command;
  std::vector<std::string> lines;
  json data = json::object();
  void line(const std::string& s) { lines.push_back(s); }
};

struct Context {
  Options opt;
  Report report;

  AlgebraFile file() const { return read_algebra_file(opt.file); }
  GroebnerCaps caps() const {
    GroebnerCaps c;
    if (!opt.caps) return c;
    std::vector<std::size_t> parts;
    std::stringstream ss(*opt.caps);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
      try {
        parts.push_back(std::stoul(tok));
      } catch (const std::exception&) {
        throw ValidationError("--caps expects max_basis[,max_pairs[,max_degree]]: " + *opt.caps);
      }
    }
    if (parts.empty() || parts.size() > 3) throw ValidationError("--caps expects one to three numbers");
    c.max_basis = parts[0];
    if (parts.size() > 1) c.max_pairs = parts[1];
    if (parts.size() > 2) c.max_degree = static_cast<int>(parts[2]);
    return c;
  }
  std::optional<Rat> length() const {
    if (!opt.length) return std::nullopt;
    return parse_rat_checked(*opt.length);
  }
  std::optional<FusionLaw> law(const AlgebraFile* f = nullptr) const {
    if (!opt.law) return std::nullopt;
    return parse_law_spec(*opt.law, f ? f->law : std::nullopt);
  }
  static Rat parse_rat_checked(const std::string& s) {
    try {
      return parse_rat(s);
    } catch (const Error&) {
      throw ValidationError("not a rational: " + s);
    }
  }
  // --y (1-based) into the file axes; all of them when absent.
  std::vector<Axis> chosen_axes(const AlgebraFile& f) const {
    std::vector<Axis> all = load_axes(f);
    if (opt.y.empty()) return all;
    std::vector<Axis> out;
    for (std::size_t i : opt.y) {
      if (i == 0 || i > all.size())
        throw ValidationError("--y index " + std::to_string(i) + " out of range 1.." + std::to_string(all.size()));
      out.push_back(all[i - 1]);
    }
    return out;
  }
};

void axes_json(json& into, const std::vector<Axis>& axes) {
  into = json::array();
  for (const auto& a : axes) {
    into.push_back({{"vector", to_json(a.vector)}, {"law", a.law.name()}, {"primitive", a.primitive}});
  }
}

void list_axes(Report& r, const std::vector<Axis>& axes, const Algebra& alg) {
  for (const auto& a : axes) {
    std::string len = alg.gram() ? " length " + to_string(form_value(alg, a.vector, a.vector)) : "";
    r.line("  " + to_string(a.vector) + " " + a.law.name() + len);
  }
}

void cmd_info(Context& c) {
  AlgebraFile f = c.file();
  const Algebra& a = f.algebra;
  Report& r = c.report;
  r.line("algebra " + f.name.value_or("(unnamed)") + " of dimension " + std::to_string(a.dim()));
  r.data["name"] = f.name ? json(*f.name) : json(nullptr);
  r.data["dim"] = a.dim();
  r.data["labels"] = a.labels();
  if (a.gram()) {
    const Rat det = determinant(*a.gram());
    r.line("Frobenius form present, Gram determinant " + to_string(det));
    r.data["gram_determinant"] = to_json(det);
  } else {
    r.line("no Frobenius form");
  }
  if (auto u = find_unit(a)) {
    r.line("unit " + to_string(*u));
    r.data["unit"] = to_json(*u);
  } else {
    r.line("no unit");
  }
  std::vector<Axis> axes = load_axes(f);
  r.line(std::to_string(axes.size()) + " axes listed");
  json list = json::array();
  for (std::size_t i = 0; i < axes.size(); ++i) {
    r.line("  " + std::to_string(i + 1) + ": " + axes[i].law.name() + (axes[i].primitive ? " primitive" : "") +
           ", eigenspaces " + dims_of(axes[i]));
    json e = json::object();
    for (const auto& p : axes[i].eigen) e[to_string(p.lambda)] = p.space.dim();
    list.push_back({{"law", axes[i].law.name()}, {"primitive", axes[i].primitive}, {"eigen_dims", e}});
  }
  r.data["axes"] = list;
}

void cmd_unit(Context& c) {
  const Algebra a = c.file().algebra;
  if (auto u = find_unit(a)) {
    c.report.line("unit " + to_string(*u));
    c.report.data["unit"] = to_json(*u);
  } else {
    c.report.line("no unit");
    c.report.data["unit"] = nullptr;
  }
}

void cmd_radical(Context& c) {
  const Algebra a = c.file().algebra;
  Subspace rad = radical(a);
  c.report.line("radical dimension " + std::to_string(rad.dim()));
  for (const auto& b : rad.basis()) c.report.line("  " + to_string(b));
  c.report.data["dim"] = rad.dim();
  c.report.data["basis"] = to_json(rad);
}

void cmd_derivations(Context& c) {
  const Algebra a = c.file().algebra;
  const std::size_t d = derivation_space(a).dim();
  c.report.line("derivation space dimension " + std::to_string(d) + "; finiteness certificate " +
                (d == 0 ? "PASS" : "FAIL"));
  c.report.data["dim"] = d;
  c.report.data["certificate"] = d == 0;
}

void cmd_axes_naive(Context& c) {
  AlgebraFile f = c.file();
  const Algebra& a = f.algebra;
  const std::optional<Rat> len = c.length();
  IdempotentResult res = naive_idempotents(a, std::nullopt, len, c.caps());
  Report& r = c.report;
  r.line("idempotent search " + std::string(to_string(res.status)) + ", " + std::to_string(res.idempotents.size()) +
         " rational idempotents" + (len ? " of length " + to_string(*len) : ""));
  if (res.status == SolveStatus::positive_dimensional)
    r.line("the idempotents form a positive-dimensional variety; constrain with --length");
  r.data["status"] = to_string(res.status);
  json ids = json::array();
  for (const auto& u : res.idempotents) ids.push_back(to_json(u));
  r.data["idempotents"] = ids;
  json facs = json::array();
  for (const auto& e : res.eliminant_factors) facs.push_back(e.poly.to_string("x" + std::to_string(e.var + 1)));
  if (!facs.empty()) {
    r.line(std::to_string(facs.size()) + " irreducible eliminant factors without rational roots");
    r.data["eliminant_factors"] = facs;
  }
  if (auto law = c.law(&f)) {
    std::vector<Axis> axes = axes_from_idempotents(a, res, *law);
    r.line(std::to_string(axes.size()) + " primitive axes of " + law->name());
    list_axes(r, axes, a);
    axes_json(r.data["axes"], axes);
  } else {
    for (const auto& u : res.idempotents) r.line("  " + to_string(u));
  }
}

void cmd_axes_nuanced(Context& c) {
  AlgebraFile f = c.file();
  std::vector<Axis> seeds = c.chosen_axes(f);
  if (seeds.empty()) throw ValidationError("axes-nuanced needs an axis (--y or an axes section)");
  SearchConfig cfg = default_search_config();
  if (auto law = c.law(&f)) cfg.target_law = *law;
  if (c.opt.length) cfg.length = c.length();
  cfg.caps = c.caps();
  const Axis& a = seeds.front();
  Report& r = c.report;
  r.data["axis"] = to_json(a.vector);
  NuancedResult res = nuanced_axes(f.algebra, a, cfg);
  r.line("U = A_0(a) of dimension " + std::to_string(res.u_dim));
  json branches = json::array();
  for (const auto& b : res.branches) {
    // with a length list the one branch without a length is z = 0
    std::string tag = b.z_length ? "(z,z) = " + to_string(*b.z_length) : cfg.z_lengths ? "z = 0" : "unrestricted";
    r.line("  branch " + tag + ": " + to_string(b.status) + ", " + std::to_string(b.zs.size()) + " z" +
           (b.used_determinant_relation ? ", determinant relation used" : "") +
           (b.unresolved_inner ? ", " + std::to_string(b.unresolved_inner) + " inner searches unresolved" : ""));
    json zs = json::array();
    for (const auto& z : b.zs) zs.push_back(to_json(z));
    branches.push_back({{"z_length", b.z_length ? to_json(*b.z_length) : json(nullptr)},
                        {"status", to_string(b.status)},
                        {"zs", zs},
                        {"determinant_relation", b.used_determinant_relation},
                        {"unresolved_inner", b.unresolved_inner}});
  }
  r.data["u_dim"] = res.u_dim;
  r.data["branches"] = branches;
  r.data["complete"] = res.complete;
  r.line(std::to_string(res.axes.size()) + " axes of " + cfg.target_law.name() + (res.complete ? "" : " (incomplete)"));
  list_axes(r, res.axes, f.algebra);
  axes_json(r.data["axes"], res.axes);
}

void outcome_json(json& into, const AxisSearchOutcome& o) {
  into["status"] = to_string(o.status);
  axes_json(into["axes"], o.axes);
}

void cmd_twins(Context& c) {
  AlgebraFile f = c.file();
  std::vector<Axis> axes = c.chosen_axes(f);
  json list = json::array();
  for (std::size_t i = 0; i < axes.size(); ++i) {
    AxisSearchOutcome o = twins_of(f.algebra, axes[i], c.caps());
    c.report.line("axis " + to_string(axes[i].vector) + ": " + std::to_string(o.axes.size()) + " twins, " +
                  to_string(o.status));
    list_axes(c.report, o.axes, f.algebra);
    json e = {{"axis", to_json(axes[i].vector)}};
    outcome_json(e, o);
    list.push_back(e);
  }
  c.report.data["twins"] = list;
}

Axet file_axet(const Context& c, const AlgebraFile& f) {
  std::vector<Axis> seeds = c.chosen_axes(f);
  if (seeds.empty()) throw ValidationError("no axes: add an axes section");
  return close_axet(seeds);
}

void cmd_miy(Context& c) {
  AlgebraFile f = c.file();
  Axet x = file_axet(c, f);
  MiyGroup g = miyamoto_group(f.algebra, x);
  c.report.line("axet of " + std::to_string(x.axes.size()) + " axes, Miyamoto group order " + std::to_string(g.order) +
                (g.faithful ? "" : " (matrix action, axes do not span)"));
  c.report.line(std::to_string(g.generators.size()) + " distinct nontrivial tau involutions");
  c.report.data["axet_size"] = x.axes.size();
  c.report.data["order"] = g.order;
  c.report.data["faithful"] = g.faithful;
  c.report.data["generators"] = g.generators.size();
}

void cmd_jordan(Context& c) {
  AlgebraFile f = c.file();
  Axet x = file_axet(c, f);
  MiyGroup g = miyamoto_group(f.algebra, x);
  const FusionLaw law = c.law(&f).value_or(FusionLaw::monster(make_rat(1, 4), make_rat(1, 32)));
  const Subspace fixed = fixed_space(g, f.algebra.dim());
  AxisSearchOutcome o = jordan_axes(f.algebra, g, law, c.caps());
  c.report.line("fixed space of Miy of dimension " + std::to_string(fixed.dim()));
  c.report.line(std::to_string(o.axes.size()) + " Jordan axes, " + to_string(o.status));
  list_axes(c.report, o.axes, f.algebra);
  c.report.data["fixed_dim"] = fixed.dim();
  outcome_json(c.report.data, o);
}

void cmd_classify_pairs(Context& c) {
  AlgebraFile f = c.file();
  std::vector<Axis> axes = c.chosen_axes(f);
  std::optional<std::vector<PairRow>> ref;
  if (c.opt.reference) ref = read_pair_reference(*c.opt.reference);
  json list = json::array();
  std::map<std::string, std::size_t> shape;
  for (std::size_t i = 0; i < axes.size(); ++i)
    for (std::size_t j = i + 1; j < axes.size(); ++j) {
      PairClass p = classify_pair(f.algebra, axes[i], axes[j], ref ? &*ref : nullptr);
      std::string label = p.label.value_or(p.candidates.empty() ? "?" : "{" + [&] {
        std::string s;
        for (const auto& x : p.candidates) s += (s.empty() ? "" : ",") + x;
        return s;
      }() + "}");
      ++shape[label];
      c.report.line("  (" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ") " + label + ": dim " +
                    std::to_string(p.dim) + ", |tau tau| " + std::to_string(p.tau_order) +
                    (p.form ? ", form " + to_string(*p.form) : "") +
                    (p.identity_length ? ", (1,1) " + to_string(*p.identity_length) : ""));
      list.push_back({{"pair", {i + 1, j + 1}},
                      {"label", p.label ? json(*p.label) : json(nullptr)},
                      {"candidates", p.candidates},
                      {"dim", p.dim},
                      {"tau_order", p.tau_order},
                      {"form", p.form ? to_json(*p.form) : json(nullptr)},
                      {"zero_product", p.zero_product},
                      {"identity_length", p.identity_length ? to_json(*p.identity_length) : json(nullptr)}});
    }
  std::string s;
  for (const auto& [k, n] : shape) s += (s.empty() ? "" : " ") + k + "x" + std::to_string(n);
  c.report.lines.insert(c.report.lines.begin(), "pair classes: " + (s.empty() ? std::string("none") : s));
  c.report.data["pairs"] = list;
}

JointDecomposition decompose_from(Context& c, const AlgebraFile& f) {
  std::vector<Axis> y = c.chosen_axes(f);
  if (y.empty()) throw ValidationError("decomposition needs axes (--y or an axes section)");
  if (!f.algebra.gram()) return decompose_joint(f.algebra, y);
  return partial_decomposition(f.algebra, y);
}

void cmd_decompose(Context& c) {
  AlgebraFile f = c.file();
  JointDecomposition d = decompose_from(c, f);
  Report& r = c.report;
  std::size_t total = 0;
  json comps = json::array();
  for (const auto& [k, w] : d.components) {
    total += w.dim();
    r.line("  " + key_string(k) + ": dim " + std::to_string(w.dim()));
    json key = json::array();
    for (const auto& x : k) key.push_back(to_json(x));
    comps.push_back({{"key", key}, {"dim", w.dim()}, {"basis", to_json(w)}});
  }
  r.lines.insert(r.lines.begin(), std::to_string(d.components.size()) + " joint eigenspaces, total dimension " +
                                      std::to_string(total) + " of " + std::to_string(f.algebra.dim()) +
                                      (d.complete ? ", complete" : ", incomplete"));
  r.line("U of dimension " + std::to_string(d.U.dim()) + (d.u_subalgebra ? ", a subalgebra" : ""));
  r.line(d.module_failures.empty() ? "every component is a U-module"
                                   : std::to_string(d.module_failures.size()) + " components fail the U-module check");
  if (d.a_sharp)
    r.line("A# of dimension " + std::to_string(d.a_sharp->dim()) + (d.sharp_module ? ", a U-module" : ""));
  r.data["complete"] = d.complete;
  r.data["seress"] = d.seress;
  r.data["components"] = comps;
  r.data["u_dim"] = d.U.dim();
  r.data["u_subalgebra"] = d.u_subalgebra;
  json fails = json::array();
  for (const auto& k : d.module_failures) fails.push_back(key_string(k));
  r.data["module_failures"] = fails;
  r.data["a_sharp_dim"] = d.a_sharp ? json(d.a_sharp->dim()) : json(nullptr);
}

// Components W with no eigenvalue 1 other than U, or those named by --w.
std::vector<std::pair<EigenKey, Subspace>> pick_components(const Context& c, const JointDecomposition& d) {
  std::vector<std::pair<EigenKey, Subspace>> out;
  if (!c.opt.w.empty()) {
    for (const auto& want : c.opt.w) {
      bool found = false;
      for (const auto& [k, w] : d.components)
        if (key_string(k) == want || key_string(k) == "(" + want + ")") {
          out.emplace_back(k, w);
          found = true;
        }
      if (!found) throw ValidationError("no joint eigenspace with key " + want);
    }
    return out;
  }
  for (const auto& [k, w] : d.components) {
    if (w == d.U) continue;
    if (std::find(k.begin(), k.end(), Rat(1)) != k.end()) continue;
    out.emplace_back(k, w);
  }
  return out;
}

void cmd_extend(Context& c) {
  AlgebraFile f = c.file();
  JointDecomposition d = decompose_from(c, f);
  json list = json::array();
  const Mat id = Mat::identity(d.U.dim());
  for (const auto& [k, w] : pick_components(c, d)) {
    ExtensionSpace e = extension_space(f.algebra, d.U, w, id);
    c.report.line("  " + key_string(k) + " (dim " + std::to_string(w.dim()) + "): identity on U extends in a space of dimension " +
                  std::to_string(e.dim()) + (e.dim() == 1 ? " (scalars)" : ""));
    list.push_back({{"key", key_string(k)}, {"dim", w.dim()}, {"extension_dim", e.dim()}});
  }
  c.report.data["u_dim"] = d.U.dim();
  c.report.data["extensions"] = list;
}

void cmd_sign_kernel(Context& c) {
  AlgebraFile f = c.file();
  JointDecomposition d = decompose_from(c, f);
  auto picked = pick_components(c, d);
  std::vector<Subspace> ws;
  std::string names;
  for (std::size_t i = 0; i < picked.size(); ++i) {
    ws.push_back(picked[i].second);
    names += (i ? ", " : "") + std::string("w") + std::to_string(i + 1) + " = " + key_string(picked[i].first);
  }
  std::vector<Probe> probes;
  for (const auto& p : c.opt.probes) probes.push_back({p});
  SignKernel k = sign_kernel(f.algebra, d.U, ws, probes, c.opt.seed, c.opt.retries);
  Report& r = c.report;
  r.line("components " + (names.empty() ? std::string("none") : names));
  json recs = json::array();
  for (const auto& rec : k.records) {
    r.line("  probe " + rec.text + ": " + (rec.nonzero ? to_string(rec.value) : std::string("zero, skipped")) +
           " after " + std::to_string(rec.attempts) + " draws");
    json draws = json::object();
    for (const auto& [leaf, x] : rec.draws) draws[leaf] = to_json(x);
    recs.push_back({{"probe", rec.text},
                    {"nonzero", rec.nonzero},
                    {"value", to_json(rec.value)},
                    {"attempts", rec.attempts},
                    {"draws", draws}});
  }
  std::string tuples;
  for (const auto& t : k.tuples) {
    std::string s;
    for (int x : t) s += (s.empty() ? "" : ",") + std::to_string(x);
    tuples += (tuples.empty() ? "" : " ") + ("(" + s + ")");
  }
  r.line("sign kernel of order " + std::to_string(k.tuples.size()) + ": " + tuples);
  r.data["seed"] = c.opt.seed;
  r.data["components"] = [&] {
    json a = json::array();
    for (const auto& [key, w] : picked) a.push_back(key_string(key));
    return a;
  }();
  r.data["probes"] = recs;
  r.data["tuples"] = k.tuples;
  r.data["square_forced"] = k.square_forced;
}

ThreeTranspositionData group_data(const Context& c) {
  GroupFile g = read_group_file(c.opt.file);
  return make_three_transposition(g.generators, g.representative);
}

std::string law_tag(const FusionLaw& law) { return law.name(); }

void cmd_matsuo(Context& c) {
  const ThreeTranspositionData data = group_data(c);
  const Rat eta = Context::parse_rat_checked(c.opt.eta);
  AlgebraFile f{std::string("M_") + to_string(eta), matsuo_algebra(data, eta), {}, std::nullopt};
  const FusionLaw j = FusionLaw::jordan(eta);
  for (std::size_t i = 0; i < f.algebra.dim(); ++i) f.axes.push_back({law_tag(j), unit_vec(f.algebra.dim(), i)});
  c.report.lines.push_back(emit_algebra(f));
  c.report.data["dim"] = f.algebra.dim();
  c.report.data["eta"] = to_json(eta);
}

void cmd_flip(Context& c) {
  const ThreeTranspositionData data = group_data(c);
  const Rat eta = Context::parse_rat_checked(c.opt.eta);
  if (c.opt.sigma.empty()) throw ValidationError("flip needs --sigma");
  const Permutation sigma = Permutation::parse_cycles(c.opt.sigma, data.D.front().degree());
  FlipResult res = double_axes_and_flip(data, eta, sigma);
  AlgebraFile f{std::string("flip"), res.algebra, {}, std::nullopt};
  const FusionLaw single = FusionLaw::jordan(eta), twin = FusionLaw::monster(2 * eta, eta);
  const std::size_t n = res.algebra.dim();
  for (std::size_t i = 0; i < res.generators.size() && i < n; ++i) {
    const FusionLaw& law = res.generators[i].kind == FlipKind::single ? single : twin;
    if (check_axis(res.algebra, unit_vec(n, i), law, false)) f.axes.push_back({law_tag(law), unit_vec(n, i)});
  }
  c.report.lines.push_back(emit_algebra(f));
  c.report.data["dim"] = n;
  c.report.data["generators"] = res.generators.size();
}

void cmd_aut_perm(Context& c) {
  AlgebraFile f = c.file();
  Axet x = file_axet(c, f);
  AutomorphismGroup g = aut_from_axis_permutations(f.algebra, x);
  c.report.line("automorphism group order " + std::to_string(g.elements.size()));
  c.report.line(std::to_string(g.candidates_tried) + " candidate maps tested on an axet of " +
                std::to_string(x.axes.size()));
  json perms = json::array();
  for (const auto& p : g.on_axes) perms.push_back(p.to_string());
  c.report.data["order"] = g.elements.size();
  c.report.data["on_axes"] = perms;
  c.report.data["candidates_tried"] = g.candidates_tried;
}

void write_out(const Context& c, bool partial, const std::string& error) {
  if (!c.opt.out) return;
  json doc = {{"command", c.report.command}, {"input", c.opt.file}};
  doc["result"] = c.report.data;
  if (partial) {
    doc["partial"] = true;
    doc["error"] = error;
  }
  std::ofstream os(*c.opt.out);
  if (!os) throw Error("cannot write " + *c.opt.out);
  os << doc.dump(2) << "\n";
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact computations in axial algebras", "axial"};
  app.require_subcommand(1);
  Context ctx;
  Options& o = ctx.opt;

  struct Command {
    const char* name;
    const char* help;
    std::function<void(Context&)> run;
    bool group_input;
  };
  const std::vector<Command> commands{
      {"info", "dimension, form, unit and listed axes", cmd_info, false},
      {"unit", "identity element", cmd_unit, false},
      {"radical", "radical of the Frobenius form", cmd_radical, false},
      {"derivations", "derivation space and finiteness certificate", cmd_derivations, false},
      {"axes-naive", "all rational idempotents (and axes with --law)", cmd_axes_naive, false},
      {"axes-nuanced", "axes through A_0 of a known axis", cmd_axes_nuanced, false},
      {"twins", "twins of the listed axes", cmd_twins, false},
      {"jordan", "Jordan axes fixed by the Miyamoto group", cmd_jordan, false},
      {"miy", "axet closure and Miyamoto group", cmd_miy, false},
      {"classify-pairs", "2-generated subalgebras of axis pairs", cmd_classify_pairs, false},
      {"decompose", "joint eigenspace decomposition", cmd_decompose, false},
      {"extend", "extensions of the identity on U to each component", cmd_extend, false},
      {"sign-kernel", "sign tuples compatible with probe pairings", cmd_sign_kernel, false},
      {"matsuo", "Matsuo algebra of a 3-transposition group", cmd_matsuo, true},
      {"flip", "flip subalgebra of a Matsuo algebra", cmd_flip, true},
      {"aut-perm", "automorphisms permuting the axet", cmd_aut_perm, false}};

  const Command* chosen = nullptr;
  for (const auto& cmd : commands) {
    CLI::App* sub = app.add_subcommand(cmd.name, cmd.help);
    sub->add_option("file", o.file, cmd.group_input ? "group file" : "algebra file")->required();
    sub->add_option("--out", o.out, "write the structured report (JSON) here");
    sub->add_option("--caps", o.caps, "solver caps max_basis[,max_pairs[,max_degree]]");
    sub->add_option("--law", o.law, "m:a:b, j:e, assoc, custom or a law file");
    sub->add_option("--length", o.length, "required (u,u) of searched idempotents");
    sub->add_option("--seed", o.seed, "probe seed");
    sub->add_option("--retries", o.retries, "re-draws for a vanishing probe");
    sub->add_option("--y", o.y, "1-based indices into the listed axes")->delimiter(',');
    sub->add_option("--reference", o.reference, "Norton-Sakuma reference rows");
    sub->add_option("--eta", o.eta, "Matsuo parameter");
    sub->add_option("--sigma", o.sigma, "involution acting on D by conjugation, as cycles");
    sub->add_option("--probe", o.probes, "probe such as \"w1*w2 . w3\"");
    sub->add_option("--w", o.w, "component key such as 0,1/4,1/4");
    sub->callback([&chosen, &cmd] { chosen = &cmd; });
  }

  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(rev);
  } catch (const CLI::ParseError& e) {
    std::ostringstream o_out, o_err;
    const int code = app.exit(e, o_out, o_err);
    out << o_out.str();
    err << o_err.str();
    return code == 0 ? kOk : kUsage;
  }
  if (!chosen) return kUsage;
  ctx.report.command = chosen->name;

  auto flush = [&] {
    for (const auto& l : ctx.report.lines) out << l << (l.empty() || l.back() != '\n' ? "\n" : "");
  };
  try {
    chosen->run(ctx);
    flush();
    write_out(ctx, false, "");
    return kOk;
  } catch (const SolverCapExceeded& e) {
    flush();
    err << "solver cap exceeded: " << e.what() << "\n";
    write_out(ctx, true, e.what());
    return kSolverCap;
  } catch (const ValidationError& e) {
    err << "invalid input: " << e.what() << "\n";
    return kValidation;
  } catch (const PreconditionError& e) {
    err << "invalid input: " << e.what() << "\n";
    return kValidation;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kFailure;
  }
}

}  // namespace axial::cli
