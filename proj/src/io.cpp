#include "hopflab/io.hpp"

#include <fstream>
#include <sstream>

#include "json.hpp"

#include "hopflab/errors.hpp"

namespace hopflab {

namespace {

using Json = nlohmann::ordered_json;

long get_long(const Json& j, const char* what) {
  if (!j.is_number_integer()) throw BadInput(std::string(what) + " must be an integer");
  return j.get<long>();
}

Field parse_field(const Json& j) {
  if (!j.is_object() || !j.contains("kind") || !j.at("kind").is_string())
    throw BadInput("field descriptor must be an object with a kind");
  std::string kind = j.at("kind").get<std::string>();
  if (kind == "rational") return Field::rationals();
  if (kind != "prime") throw BadInput("unknown field kind: " + kind);
  if (!j.contains("p")) throw BadInput("prime field needs p");
  long long p = get_long(j.at("p"), "p");
  long long order = j.contains("omega_order") ? get_long(j.at("omega_order"), "omega_order") : 0;
  try {
    return order > 0 ? Field::prime_with_root(p, order) : Field::prime(p);
  } catch (const Error& e) {
    throw BadInput(std::string("bad field: ") + e.what());
  }
}

Json field_json(const Field& f) {
  Json j;
  if (f.is_rational()) {
    j["kind"] = "rational";
  } else {
    j["kind"] = "prime";
    j["p"] = f.p;
    if (f.omega_order > 0) j["omega_order"] = f.omega_order;
  }
  return j;
}

Scalar parse_scalar(const Field& f, const Json& j, const char* where) {
  if (!j.is_string()) throw BadInput(std::string(where) + ": scalar must be a string");
  std::optional<Scalar> s = Scalar::parse(f, j.get<std::string>());
  if (!s) throw BadInput(std::string(where) + ": cannot parse scalar " + j.get<std::string>());
  return *s;
}

// Reads [[idx..., scalar], ...] entries with nidx leading indices.
template <typename Fn>
void for_entries(const Json& doc, const char* key, size_t nidx, const Field& f, Fn&& fn) {
  const Json& block = doc.at(key);
  if (!block.is_array()) throw BadInput(std::string(key) + " must be an array");
  for (const Json& e : block) {
    if (!e.is_array() || e.size() != nidx + 1)
      throw BadInput(std::string(key) + ": each entry needs " + std::to_string(nidx) +
                     " indices and a scalar");
    std::vector<long> idx(nidx);
    for (size_t t = 0; t < nidx; ++t) {
      idx[t] = get_long(e.at(t), key);
      if (idx[t] < 0) throw BadInput(std::string(key) + ": negative index");
    }
    fn(idx, parse_scalar(f, e.at(nidx), key));
  }
}

void need_below(const char* key, long v, long bound) {
  if (v >= bound)
    throw BadInput(std::string(key) + ": index " + std::to_string(v) + " out of range");
}

std::vector<SparseEntry> read_raw(const Json& doc, const char* key, const Field& f, long dim,
                                  int own_first, int own_count) {
  std::vector<SparseEntry> out;
  for_entries(doc, key, 3, f, [&](const std::vector<long>& idx, const Scalar& v) {
    for (int t = own_first; t < own_first + own_count; ++t) need_below(key, idx[t], dim);
    out.push_back(SparseEntry{idx, v});
  });
  return out;
}

Matrix shape_raw(const std::vector<SparseEntry>& entries, const char* key, const Field& f,
                 long rows, long cols, long dim_m, long dim_h, bool co) {
  Matrix out(f, rows, cols);
  for (const SparseEntry& e : entries) {
    // action (h, m, m'); coaction (m, m', h).
    long h = co ? e.idx[2] : e.idx[0];
    long m = co ? e.idx[0] : e.idx[1];
    long mp = co ? e.idx[1] : e.idx[2];
    need_below(key, h, dim_h);
    if (co)
      out.at(mp * dim_h + h, m) += e.value;
    else
      out.at(mp, h * dim_m + m) += e.value;
  }
  return out;
}

}  // namespace

AlgebraFile parse_algebra_file(const std::string& text) {
  Json doc;
  try {
    doc = Json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw BadInput(std::string("malformed JSON: ") + e.what());
  }
  if (!doc.is_object()) throw BadInput("top level must be an object");
  if (!doc.contains("field") || !doc.contains("dim"))
    throw BadInput("field and dim are required");
  if (doc.contains("versions")) {
    const Json& v = doc.at("versions");
    if (!v.is_object() || !v.contains("format") || get_long(v.at("format"), "format") != 1)
      throw BadInput("unsupported format version");
  }

  AlgebraFile af;
  af.field = parse_field(doc.at("field"));
  af.name = doc.contains("name") && doc.at("name").is_string()
                ? doc.at("name").get<std::string>()
                : std::string();
  af.dim = get_long(doc.at("dim"), "dim");
  if (af.dim < 1) throw BadInput("dim must be positive");
  long n = af.dim;
  const Field& f = af.field;

  if (!doc.contains("mult") || !doc.contains("unit")) throw BadInput("mult and unit are required");
  af.mult = Matrix(f, n, n * n);
  for_entries(doc, "mult", 3, f, [&](const std::vector<long>& idx, const Scalar& v) {
    need_below("mult", idx[0], n);
    need_below("mult", idx[1], n);
    need_below("mult", idx[2], n);
    af.mult.at(idx[2], idx[0] * n + idx[1]) += v;
  });
  af.unit = Matrix(f, n, 1);
  for_entries(doc, "unit", 1, f, [&](const std::vector<long>& idx, const Scalar& v) {
    need_below("unit", idx[0], n);
    af.unit.at(idx[0], 0) += v;
  });

  if (doc.contains("comult")) {
    af.comult = Matrix(f, n * n, n);
    for_entries(doc, "comult", 3, f, [&](const std::vector<long>& idx, const Scalar& v) {
      need_below("comult", idx[0], n);
      need_below("comult", idx[1], n);
      need_below("comult", idx[2], n);
      af.comult->at(idx[1] * n + idx[2], idx[0]) += v;
    });
  }
  if (doc.contains("counit")) {
    af.counit = Matrix(f, 1, n);
    for_entries(doc, "counit", 1, f, [&](const std::vector<long>& idx, const Scalar& v) {
      need_below("counit", idx[0], n);
      af.counit->at(0, idx[0]) += v;
    });
  }
  if (doc.contains("antipode")) {
    af.antipode = Matrix(f, n, n);
    for_entries(doc, "antipode", 2, f, [&](const std::vector<long>& idx, const Scalar& v) {
      need_below("antipode", idx[0], n);
      need_below("antipode", idx[1], n);
      af.antipode->at(idx[1], idx[0]) += v;
    });
  }
  if (doc.contains("rmatrix")) {
    SVec r;
    for_entries(doc, "rmatrix", 2, f, [&](const std::vector<long>& idx, const Scalar& v) {
      need_below("rmatrix", idx[0], n);
      need_below("rmatrix", idx[1], n);
      r.push_back({idx[0] * n + idx[1], v});
    });
    sv_normalize(r);
    af.rmatrix = std::move(r);
  }
  if (doc.contains("action")) {
    af.action = read_raw(doc, "action", f, n, 1, 2);
    af.has_action = true;
  }
  if (doc.contains("baction")) {
    af.baction = read_raw(doc, "baction", f, n, 1, 2);
    af.has_baction = true;
  }
  if (doc.contains("coaction")) {
    af.coaction = read_raw(doc, "coaction", f, n, 0, 2);
    af.has_coaction = true;
  }
  return af;
}

AlgebraFile load_algebra_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw BadInput("cannot read " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_algebra_file(buf.str());
}

std::string emit_algebra_file(const AlgebraFile& af) {
  long n = af.dim;
  using Entries = std::vector<std::string>;
  auto entry = [](std::initializer_list<long> idx, const Scalar& v) {
    std::string s = "[";
    for (long t : idx) s += std::to_string(t) + ",";
    return s + Json(v.str()).dump() + "]";
  };

  std::vector<std::pair<std::string, Entries>> blocks;
  Entries mult;
  for (long i = 0; i < n; ++i)
    for (long j = 0; j < n; ++j)
      for (long k = 0; k < n; ++k)
        if (!af.mult.at(k, i * n + j).is_zero())
          mult.push_back(entry({i, j, k}, af.mult.at(k, i * n + j)));
  blocks.push_back({"mult", std::move(mult)});
  Entries unit;
  for (long k = 0; k < n; ++k)
    if (!af.unit.at(k, 0).is_zero()) unit.push_back(entry({k}, af.unit.at(k, 0)));
  blocks.push_back({"unit", std::move(unit)});
  if (af.comult) {
    Entries block;
    for (long i = 0; i < n; ++i)
      for (long j = 0; j < n; ++j)
        for (long k = 0; k < n; ++k)
          if (!af.comult->at(j * n + k, i).is_zero())
            block.push_back(entry({i, j, k}, af.comult->at(j * n + k, i)));
    blocks.push_back({"comult", std::move(block)});
  }
  if (af.counit) {
    Entries block;
    for (long i = 0; i < n; ++i)
      if (!af.counit->at(0, i).is_zero()) block.push_back(entry({i}, af.counit->at(0, i)));
    blocks.push_back({"counit", std::move(block)});
  }
  if (af.antipode) {
    Entries block;
    for (long i = 0; i < n; ++i)
      for (long j = 0; j < n; ++j)
        if (!af.antipode->at(j, i).is_zero()) block.push_back(entry({i, j}, af.antipode->at(j, i)));
    blocks.push_back({"antipode", std::move(block)});
  }
  if (af.rmatrix) {
    Entries block;
    for (const auto& t : *af.rmatrix)
      block.push_back(entry({t.first / n, t.first % n}, t.second));
    blocks.push_back({"rmatrix", std::move(block)});
  }
  auto raw_entries = [&](const std::vector<SparseEntry>& src) {
    Entries block;
    for (const SparseEntry& e : src) {
      if (e.value.is_zero()) continue;
      block.push_back(entry({e.idx[0], e.idx[1], e.idx[2]}, e.value));
    }
    return block;
  };
  if (af.has_action) blocks.push_back({"action", raw_entries(af.action)});
  if (af.has_baction) blocks.push_back({"baction", raw_entries(af.baction)});
  if (af.has_coaction) blocks.push_back({"coaction", raw_entries(af.coaction)});

  std::ostringstream os;
  os << "{\n";
  os << " \"field\": " << field_json(af.field).dump() << ",\n";
  os << " \"name\": " << Json(af.name).dump() << ",\n";
  os << " \"dim\": " << n << ",\n";
  for (const auto& [key, entries] : blocks) {
    os << " \"" << key << "\": [";
    for (size_t i = 0; i < entries.size(); ++i) os << (i ? ",\n  " : "\n  ") << entries[i];
    os << (entries.empty() ? "],\n" : "\n ],\n");
  }
  os << " \"versions\": {\"format\": 1}\n}\n";
  return os.str();
}

void write_algebra_file(const std::string& path, const AlgebraFile& af) {
  std::ofstream out(path);
  if (!out) throw BadInput("cannot write " + path);
  out << emit_algebra_file(af);
  if (!out) throw BadInput("cannot write " + path);
}

Hopf to_hopf(const AlgebraFile& af) {
  if (!af.comult || !af.counit || !af.antipode)
    throw BadInput("hopf structure needs comult, counit and antipode");
  return Hopf{af.field, af.dim, af.mult, af.unit, *af.comult, *af.counit, *af.antipode};
}

Algebra to_algebra(const AlgebraFile& af) { return Algebra{af.field, af.dim, af.mult, af.unit}; }

SVec rmatrix_of(const AlgebraFile& af) {
  if (!af.rmatrix) throw BadInput("rmatrix block is required");
  return *af.rmatrix;
}

Matrix action_matrix(const AlgebraFile& af, long dim_h) {
  if (!af.has_action) throw BadInput("action block is required");
  return shape_raw(af.action, "action", af.field, af.dim, dim_h * af.dim, af.dim, dim_h, false);
}

Matrix baction_matrix(const AlgebraFile& af, long dim_h) {
  if (!af.has_baction) throw BadInput("baction block is required");
  return shape_raw(af.baction, "baction", af.field, af.dim, dim_h * af.dim, af.dim, dim_h, false);
}

Matrix coaction_matrix(const AlgebraFile& af, long dim_h) {
  if (!af.has_coaction) throw BadInput("coaction block is required");
  return shape_raw(af.coaction, "coaction", af.field, af.dim * dim_h, af.dim, af.dim, dim_h, true);
}

namespace {

std::vector<SparseEntry> action_entries(const Matrix& act, long dim_m) {
  long dim_h = act.cols() / dim_m;
  std::vector<SparseEntry> out;
  for (long h = 0; h < dim_h; ++h)
    for (long m = 0; m < dim_m; ++m)
      for (long mp = 0; mp < dim_m; ++mp)
        if (!act.at(mp, h * dim_m + m).is_zero())
          out.push_back(SparseEntry{{h, m, mp}, act.at(mp, h * dim_m + m)});
  return out;
}

}  // namespace

AlgebraFile from_hopf(const Hopf& h, const std::string& name) {
  AlgebraFile af;
  af.field = h.field;
  af.name = name;
  af.dim = h.dim;
  af.mult = h.mult;
  af.unit = h.unit;
  af.comult = h.comult;
  af.counit = h.counit;
  af.antipode = h.antipode;
  return af;
}

AlgebraFile from_algebra(const Algebra& a, const std::string& name) {
  AlgebraFile af;
  af.field = a.field;
  af.name = name;
  af.dim = a.dim;
  af.mult = a.mult;
  af.unit = a.unit;
  return af;
}

AlgebraFile from_comodule_algebra(const CatComoduleAlgebra& t, const std::string& name) {
  AlgebraFile af;
  af.field = t.alg.mult.field();
  af.name = name;
  af.dim = t.alg.dim();
  af.mult = t.alg.mult;
  af.unit = t.alg.unit;
  af.action = action_entries(t.alg.carrier.action, af.dim);
  af.has_action = true;
  long dim_b = t.coaction.rows() / af.dim;
  for (long m = 0; m < af.dim; ++m)
    for (long mp = 0; mp < af.dim; ++mp)
      for (long h = 0; h < dim_b; ++h)
        if (!t.coaction.at(mp * dim_b + h, m).is_zero())
          af.coaction.push_back(SparseEntry{{m, mp, h}, t.coaction.at(mp * dim_b + h, m)});
  af.has_coaction = true;
  return af;
}

AlgebraFile from_cat_hopf(const CatHopf& b, const std::string& name) {
  AlgebraFile af;
  af.field = b.mult.field();
  af.name = name;
  af.dim = b.dim();
  af.mult = b.mult;
  af.unit = b.unit;
  af.comult = b.comult;
  af.counit = b.counit;
  af.antipode = b.antipode;
  af.action = action_entries(b.carrier.action, af.dim);
  af.has_action = true;
  return af;
}

CocycleFile parse_cocycle_file(const std::string& text) {
  Json doc;
  try {
    doc = Json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw BadInput(std::string("malformed JSON: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("field") || !doc.contains("dim") ||
      !doc.contains("sigma"))
    throw BadInput("cocycle file needs field, dim and sigma");
  CocycleFile cf;
  cf.field = parse_field(doc.at("field"));
  cf.dim = get_long(doc.at("dim"), "dim");
  if (cf.dim < 1) throw BadInput("dim must be positive");
  long n = cf.dim;
  cf.sigma = Matrix(cf.field, n, n);
  for_entries(doc, "sigma", 2, cf.field, [&](const std::vector<long>& idx, const Scalar& v) {
    need_below("sigma", idx[0], n);
    need_below("sigma", idx[1], n);
    cf.sigma.at(idx[0], idx[1]) += v;
  });
  if (doc.contains("sigma_inv")) {
    cf.sigma_inv = Matrix(cf.field, n, n);
    for_entries(doc, "sigma_inv", 2, cf.field, [&](const std::vector<long>& idx, const Scalar& v) {
      need_below("sigma_inv", idx[0], n);
      need_below("sigma_inv", idx[1], n);
      cf.sigma_inv->at(idx[0], idx[1]) += v;
    });
  }
  return cf;
}

CocycleFile load_cocycle_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw BadInput("cannot read " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_cocycle_file(buf.str());
}

std::string report_json(const std::string& check, const AxiomReport& rep, long long seed) {
  Json doc;
  doc["check"] = check;
  doc["pass"] = rep.ok();
  Json details = Json::array();
  for (const AxiomCheck& c : rep.checks) {
    Json d;
    d["axiom"] = c.axiom;
    d["pass"] = c.pass;
    if (!c.pass && !c.witness.empty()) d["witness"] = c.witness;
    details.push_back(std::move(d));
  }
  doc["details"] = std::move(details);
  if (const AxiomCheck* fail = rep.first_failure()) {
    doc["witness"] = fail->witness.empty() ? fail->axiom : fail->axiom + ": " + fail->witness;
  }
  doc["seed"] = seed;
  doc["versions"] = Json{{"format", 1}};
  return doc.dump(1) + "\n";
}

}  // namespace hopflab
