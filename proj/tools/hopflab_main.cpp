#include <iostream>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "hopflab/cat.hpp"
#include "hopflab/errors.hpp"
#include "hopflab/families.hpp"
#include "hopflab/galois.hpp"
#include "hopflab/io.hpp"
#include "hopflab/modcat.hpp"
#include "hopflab/qt.hpp"

using namespace hopflab;

namespace {

int emit_report(const std::string& check, const AxiomReport& rep, long long seed) {
  std::cout << report_json(check, rep, seed);
  return rep.ok() ? 0 : 1;
}

struct VerifyArgs {
  std::string kind, file, over, ambient;
  long long seed = 0;
};

struct FamilyArgs {
  long n = 0;
  long m = 1;
  std::vector<long> d;
  long s = 0;
  bool has_s = false;
  bool line = false;
  long long p = 0;
  std::string emit, name;
};

struct GaloisArgs {
  std::vector<std::string> files;
  long n = 0;
  long m = 1;
  std::vector<long> d;
  long s = 0;
  long long p = 0;
  long long seed = 0;
  std::string emit;
};

Field field_for(long long p, long m) {
  return p > 0 ? Field::prime_with_root(p, 2 * m) : Field::rationals();
}

int run_verify(const VerifyArgs& a) {
  AlgebraFile af = load_algebra_file(a.file);
  Context ctx = Context::trivial(af.field);
  bool braided = false;
  if (!a.ambient.empty()) {
    AlgebraFile lf = load_algebra_file(a.ambient);
    if (lf.field != af.field) throw BadInput("ambient field differs from the object field");
    ctx = Context::with_r(std::make_shared<const Hopf>(to_hopf(lf)), rmatrix_of(lf));
    braided = true;
  }
  auto carrier_of = [&](const AlgebraFile& xf) {
    return braided ? Module{ctx.ambient, xf.dim, action_matrix(xf, ctx.ambient->dim)}
                   : ctx.vec_object(xf.dim);
  };

  if (a.kind == "hopf") return emit_report("hopf", verify_hopf(to_hopf(af)), a.seed);
  if (a.kind == "algebra") return emit_report("algebra", verify_algebra(to_algebra(af)), a.seed);
  if (a.kind == "qt") return emit_report("qt", check_qt(to_hopf(af), rmatrix_of(af)), a.seed);
  if (a.kind == "azumaya") {
    CatAlgebra alg{carrier_of(af), af.mult, af.unit};
    return emit_report("azumaya", azumaya_check(ctx, alg), a.seed);
  }

  if (a.over.empty()) throw BadInput("--over is required for " + a.kind);
  AlgebraFile bf = load_algebra_file(a.over);
  if (bf.field != af.field) throw BadInput("field mismatch between the files");
  Hopf bh = to_hopf(bf);
  CatHopf b{carrier_of(bf), bh.mult, bh.unit, bh.comult, bh.counit, bh.antipode};
  if (a.kind == "module-algebra") {
    Matrix act = braided ? baction_matrix(af, bf.dim) : action_matrix(af, bf.dim);
    CatModuleAlgebra ma{CatAlgebra{carrier_of(af), af.mult, af.unit}, act};
    return emit_report("module-algebra", verify_cat_module_algebra(ctx, b, ma), a.seed);
  }
  CatComoduleAlgebra ca{CatAlgebra{carrier_of(af), af.mult, af.unit},
                        coaction_matrix(af, bf.dim)};
  if (a.kind == "comodule-algebra")
    return emit_report("comodule-algebra", verify_cat_comodule_algebra(ctx, b, ca), a.seed);
  return emit_report("galois", is_galois(ctx, b, ca).report, a.seed);
}

int run_family(const FamilyArgs& a) {
  Field f = field_for(a.p, a.m);
  HndParams params{a.n, a.m, a.d, a.has_s ? std::optional<long>(a.s) : std::nullopt};
  std::string name = a.name;
  if (name.empty()) {
    std::string ds;
    for (size_t i = 0; i < a.d.size(); ++i) ds += (i ? "," : "") + std::to_string(a.d[i]);
    name = "H(n=" + std::to_string(a.n) + ",m=" + std::to_string(a.m) + ",d=" + ds + ")";
  }
  AlgebraFile af;
  if (a.line) {
    af = from_cat_hopf(braided_line(params, f), "line of " + name);
  } else {
    af = from_hopf(hnd(params, f), name);
    if (a.has_s) {
      std::vector<long> good = qt_congruence(params);
      if (std::find(good.begin(), good.end(), a.s) == good.end())
        throw BadParams("index " + std::to_string(a.s) + " fails the congruence");
      af.rmatrix = r_s_embedded(params, f, a.s);
    }
  }
  if (a.emit.empty())
    std::cout << emit_algebra_file(af);
  else
    write_algebra_file(a.emit, af);
  return 0;
}

FamilySetting setting_for(const GaloisArgs& a) {
  Field f = field_for(a.p, a.m);
  return family_setting(HndParams{a.n, a.m, a.d, a.s}, f);
}

CatComoduleAlgebra object_from(const AlgebraFile& af, const FamilySetting& fs) {
  if (af.field != fs.ctx.field()) throw BadInput("object field differs from the setting field");
  Matrix act = action_matrix(af, fs.ambient->dim);
  Matrix co = coaction_matrix(af, fs.line.dim());
  return CatComoduleAlgebra{CatAlgebra{Module{fs.ambient, af.dim, act}, af.mult, af.unit}, co};
}

GaloisObject galois_or_fail(const FamilySetting& fs, const CatComoduleAlgebra& t,
                            const std::string& which) {
  GaloisCheck gc = is_galois(fs.ctx, fs.line, t);
  if (!gc.object) {
    const AxiomCheck* fail = gc.report.first_failure();
    throw BadInput(which + " is not a galois object: " + (fail ? fail->axiom : "unknown"));
  }
  return *gc.object;
}

void maybe_emit(const std::string& path, const CatComoduleAlgebra& t, const std::string& name) {
  if (!path.empty()) write_algebra_file(path, from_comodule_algebra(t, name));
}

int run_galois(const std::string& sub, const GaloisArgs& a) {
  FamilySetting fs = setting_for(a);

  if (sub == "invariant") {
    AlgebraFile af = load_algebra_file(a.files.at(0));
    CParams cp = galois_invariant(fs, object_from(af, fs));
    nlohmann::ordered_json out;
    out["a"] = cp.a.str();
    nlohmann::ordered_json alpha = nlohmann::ordered_json::array();
    for (const Scalar& v : cp.alpha) alpha.push_back(v.str());
    out["alpha"] = std::move(alpha);
    std::cout << out.dump() << "\n";
    return 0;
  }
  if (sub == "cotensor") {
    AlgebraFile xf = load_algebra_file(a.files.at(0));
    AlgebraFile yf = load_algebra_file(a.files.at(1));
    GaloisObject x = galois_or_fail(fs, object_from(xf, fs), xf.name.empty() ? "left" : xf.name);
    GaloisObject y = galois_or_fail(fs, object_from(yf, fs), yf.name.empty() ? "right" : yf.name);
    GaloisObject out = cotensor(fs.ctx, fs.line, x, y);
    maybe_emit(a.emit, out.carrier, "cotensor");
    return emit_report("galois cotensor", is_galois(fs.ctx, fs.line, out.carrier).report, a.seed);
  }
  if (sub == "opposite") {
    AlgebraFile xf = load_algebra_file(a.files.at(0));
    GaloisObject x = galois_or_fail(fs, object_from(xf, fs), "input");
    GaloisObject out = opposite_galois(fs.ctx, fs.line, x);
    maybe_emit(a.emit, out.carrier, "opposite");
    return emit_report("galois opposite", is_galois(fs.ctx, fs.line, out.carrier).report, a.seed);
  }
  if (sub == "normal-basis") {
    AlgebraFile xf = load_algebra_file(a.files.at(0));
    GaloisObject x = galois_or_fail(fs, object_from(xf, fs), "input");
    std::optional<Matrix> nb = has_normal_basis(fs.ctx, fs.line, x, a.seed);
    AxiomReport rep;
    rep.subject = "normal basis";
    rep.add("invertible colinear map exists", nb.has_value());
    return emit_report("galois normal-basis", rep, a.seed);
  }
  if (sub == "twist") {
    CocycleFile cf = load_cocycle_file(a.files.at(0));
    if (cf.field != fs.ctx.field()) throw BadInput("cocycle field differs from the setting field");
    if (cf.dim != fs.line.dim()) throw BadInput("cocycle dimension differs from the line");
    std::optional<Matrix> inv =
        cf.sigma_inv ? cf.sigma_inv : convolution_inverse_form(fs.ctx, fs.line, cf.sigma);
    if (!inv) {
      AxiomReport rep;
      rep.subject = "cocycle";
      rep.add("convolution inverse", false, "no two-sided inverse");
      return emit_report("galois twist", rep, a.seed);
    }
    CocycleData cd{cf.sigma, *inv};
    AxiomReport chk = check_cocycle(fs.ctx, fs.line, cd);
    if (!chk.ok()) return emit_report("galois twist", chk, a.seed);
    GaloisObject out = cocycle_twist(fs.ctx, fs.line, cd);
    maybe_emit(a.emit, out.carrier, "twist");
    return emit_report("galois twist", chk, a.seed);
  }
  if (sub == "upsilon") {
    AlgebraFile xf = load_algebra_file(a.files.at(0));
    if (xf.field != fs.ctx.field()) throw BadInput("object field differs from the setting field");
    CatModuleAlgebra ma{CatAlgebra{Module{fs.ambient, xf.dim, action_matrix(xf, fs.ambient->dim)},
                                   xf.mult, xf.unit},
                        baction_matrix(xf, fs.line.dim())};
    AxiomReport rep;
    rep.subject = "upsilon";
    try {
      UpsilonResult ur = upsilon(fs.ctx, fs.line, ma);
      maybe_emit(a.emit, ur.object.carrier, "upsilon");
      rep.add("central galois object extracted", true);
      return emit_report("galois upsilon", rep, a.seed);
    } catch (const NotAzumaya& e) {
      rep.add("input azumaya", false, e.what());
      return emit_report("galois upsilon", rep, a.seed);
    }
  }
  // roundtrip
  AlgebraFile xf = load_algebra_file(a.files.at(0));
  return emit_report("galois roundtrip", gamma_roundtrip(fs.ctx, fs.line, object_from(xf, fs)),
                     a.seed);
}

void add_setting_options(CLI::App* cmd, GaloisArgs& a) {
  cmd->add_option("--n", a.n, "number of odd generators")->required();
  cmd->add_option("--m", a.m, "half group order")->required();
  cmd->add_option("--d", a.d, "generator weights")->required()->delimiter(',');
  cmd->add_option("--s", a.s, "quasi-triangular index")->required();
  cmd->add_option("--p", a.p, "prime modulus, omit for the rationals");
  cmd->add_option("--seed", a.seed, "search seed")->default_val(0);
  cmd->add_option("--emit", a.emit, "write the resulting object here");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact verification toolkit for braided Hopf algebra structures"};
  app.require_subcommand(1);

  VerifyArgs va;
  CLI::App* verify = app.add_subcommand("verify", "run a named verification suite on files");
  verify
      ->add_option("kind", va.kind, "what to verify")
      ->required()
      ->check(CLI::IsMember({"hopf", "algebra", "qt", "module-algebra", "comodule-algebra",
                             "galois", "azumaya"}));
  verify->add_option("file", va.file, "structure file")->required();
  verify->add_option("--over", va.over, "Hopf algebra the structure lives over");
  verify->add_option("--ambient", va.ambient, "quasi-triangular ambient (needs rmatrix)");
  verify->add_option("--seed", va.seed, "search seed")->default_val(0);

  FamilyArgs fa;
  CLI::App* family = app.add_subcommand("family", "emit a member of the pointed family");
  family->add_option("--n", fa.n, "number of odd generators")->default_val(0);
  family->add_option("--m", fa.m, "half group order")->required();
  family->add_option("--d", fa.d, "generator weights")->delimiter(',');
  CLI::Option* sopt = family->add_option("--s", fa.s, "quasi-triangular index to embed");
  family->add_option("--p", fa.p, "prime modulus, omit for the rationals");
  family->add_option("--emit", fa.emit, "output path, stdout if omitted");
  family->add_option("--name", fa.name, "name field of the emitted file");

  GaloisArgs ga;
  CLI::App* galois = app.add_subcommand("galois", "operations on galois objects of a family line");
  galois->require_subcommand(1);
  std::vector<std::pair<std::string, int>> subs = {
      {"cotensor", 2},   {"opposite", 1}, {"invariant", 1}, {"normal-basis", 1},
      {"twist", 1},      {"upsilon", 1},  {"roundtrip", 1}};
  for (const auto& [name, nfiles] : subs) {
    CLI::App* cmd = galois->add_subcommand(name, name + " on object files");
    cmd->add_option("files", ga.files, "input files")->expected(nfiles);
    add_setting_options(cmd, ga);
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (app.got_subcommand(verify)) return run_verify(va);
    if (app.got_subcommand(family)) {
      fa.has_s = sopt->count() > 0;
      return run_family(fa);
    }
    for (CLI::App* cmd : galois->get_subcommands()) return run_galois(cmd->get_name(), ga);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
