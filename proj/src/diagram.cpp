#include "hopflab/diagram.hpp"

#include "hopflab/errors.hpp"

namespace hopflab {

namespace {

const Matrix& find_tensor(const std::map<std::string, Matrix>& m, const std::string& name,
                          const char* what) {
  auto it = m.find(name);
  if (it == m.end()) throw UnresolvedBox(std::string(what) + " for " + name);
  return it->second;
}

}  // namespace

void DiagramEnv::add_object(const std::string& name, long dim) {
  if (dim < 1) throw BadInput("object " + name + " needs dim >= 1");
  auto it = objects_.find(name);
  if (it != objects_.end() && it->second != dim)
    throw BadInput("object " + name + " re-registered with a different dimension");
  objects_[name] = dim;
  std::string dual = name + "*";
  if (objects_.find(dual) == objects_.end()) objects_[dual] = dim;
}

void DiagramEnv::register_algebra(const std::string& name, const Matrix& mult,
                                  const Matrix& unit) {
  long n = mult.rows();
  if (mult.cols() != n * n || unit.rows() != n || unit.cols() != 1)
    throw DimMismatch("register_algebra " + name);
  add_object(name, n);
  mult_.insert_or_assign(name, mult);
  unit_.insert_or_assign(name, unit);
}

void DiagramEnv::register_coalgebra(const std::string& name, const Matrix& comult,
                                    const Matrix& counit) {
  long n = comult.cols();
  if (comult.rows() != n * n || counit.rows() != 1 || counit.cols() != n)
    throw DimMismatch("register_coalgebra " + name);
  add_object(name, n);
  comult_.insert_or_assign(name, comult);
  counit_.insert_or_assign(name, counit);
}

void DiagramEnv::register_antipode(const std::string& name, const Matrix& antipode) {
  if (antipode.rows() != antipode.cols()) throw DimMismatch("register_antipode " + name);
  add_object(name, antipode.rows());
  antipode_.insert_or_assign(name, antipode);
}

void DiagramEnv::register_hopf(const std::string& name, const Hopf& h) {
  register_algebra(name, h.mult, h.unit);
  register_coalgebra(name, h.comult, h.counit);
  register_antipode(name, h.antipode);
}

void DiagramEnv::register_braiding(const std::string& x, const std::string& y,
                                   const Matrix& phi) {
  long dx = dim(x), dy = dim(y);
  if (phi.rows() != dy * dx || phi.cols() != dx * dy)
    throw DimMismatch("register_braiding " + x + "," + y);
  auto inv = inverse(phi);
  if (!inv) throw NotInvertible("braiding " + x + "," + y);
  braid_.insert_or_assign({x, y}, phi);
  braid_inv_.insert_or_assign({x, y}, *inv);
}

long DiagramEnv::dim(const std::string& name) const {
  auto it = objects_.find(name);
  if (it == objects_.end()) throw UnresolvedBox("object " + name);
  return it->second;
}

const Matrix& DiagramEnv::mult(const std::string& name) const {
  return find_tensor(mult_, name, "mult");
}
const Matrix& DiagramEnv::unit(const std::string& name) const {
  return find_tensor(unit_, name, "unit");
}
const Matrix& DiagramEnv::comult(const std::string& name) const {
  return find_tensor(comult_, name, "comult");
}
const Matrix& DiagramEnv::counit(const std::string& name) const {
  return find_tensor(counit_, name, "counit");
}
const Matrix& DiagramEnv::antipode(const std::string& name) const {
  return find_tensor(antipode_, name, "antipode");
}
const Matrix& DiagramEnv::braiding(const std::string& x, const std::string& y) const {
  auto it = braid_.find({x, y});
  if (it == braid_.end()) throw UnresolvedBox("braiding " + x + "," + y);
  return it->second;
}
const Matrix& DiagramEnv::braiding_inverse(const std::string& x, const std::string& y) const {
  auto it = braid_inv_.find({x, y});
  if (it == braid_inv_.end()) throw UnresolvedBox("braiding inverse " + x + "," + y);
  return it->second;
}

Box Box::id(std::string x) { return Box{Kind::Id, std::move(x), {}, {}, {}, {}}; }
Box Box::mult(std::string x) { return Box{Kind::Mult, std::move(x), {}, {}, {}, {}}; }
Box Box::comult(std::string x) { return Box{Kind::Comult, std::move(x), {}, {}, {}, {}}; }
Box Box::unit(std::string x) { return Box{Kind::Unit, std::move(x), {}, {}, {}, {}}; }
Box Box::counit(std::string x) { return Box{Kind::Counit, std::move(x), {}, {}, {}, {}}; }
Box Box::antipode(std::string x) { return Box{Kind::Antipode, std::move(x), {}, {}, {}, {}}; }
Box Box::braid(std::string x, std::string y) {
  return Box{Kind::Braid, std::move(x), std::move(y), {}, {}, {}};
}
Box Box::braid_inv(std::string x, std::string y) {
  return Box{Kind::BraidInv, std::move(x), std::move(y), {}, {}, {}};
}
Box Box::ev(std::string x) { return Box{Kind::Ev, std::move(x), {}, {}, {}, {}}; }
Box Box::coev(std::string x) { return Box{Kind::Coev, std::move(x), {}, {}, {}, {}}; }
Box Box::flip(std::string x, std::string y) {
  return Box{Kind::Flip, std::move(x), std::move(y), {}, {}, {}};
}
Box Box::custom(Matrix m, std::vector<std::string> in, std::vector<std::string> out) {
  return Box{Kind::Custom, {}, {}, std::move(m), std::move(in), std::move(out)};
}

std::vector<std::string> Box::inputs() const {
  switch (kind) {
    case Kind::Id:
    case Kind::Comult:
    case Kind::Counit:
    case Kind::Antipode:
      return {x};
    case Kind::Mult:
      return {x, x};
    case Kind::Unit:
    case Kind::Coev:
      return {};
    case Kind::Braid:
    case Kind::Flip:
      return {x, y};
    case Kind::BraidInv:
      return {y, x};
    case Kind::Ev:
      return {x + "*", x};
    case Kind::Custom:
      return in_wires;
  }
  return {};
}

std::vector<std::string> Box::outputs() const {
  switch (kind) {
    case Kind::Id:
    case Kind::Mult:
    case Kind::Antipode:
    case Kind::Unit:
      return {x};
    case Kind::Comult:
      return {x, x};
    case Kind::Counit:
    case Kind::Ev:
      return {};
    case Kind::Braid:
    case Kind::Flip:
      return {y, x};
    case Kind::BraidInv:
      return {x, y};
    case Kind::Coev:
      return {x, x + "*"};
    case Kind::Custom:
      return out_wires;
  }
  return {};
}

namespace {

Matrix box_matrix(const Box& b, const DiagramEnv& env) {
  const Field& f = env.field();
  switch (b.kind) {
    case Box::Kind::Id:
      return Matrix::identity(f, env.dim(b.x));
    case Box::Kind::Mult:
      return env.mult(b.x);
    case Box::Kind::Comult:
      return env.comult(b.x);
    case Box::Kind::Unit:
      return env.unit(b.x);
    case Box::Kind::Counit:
      return env.counit(b.x);
    case Box::Kind::Antipode:
      return env.antipode(b.x);
    case Box::Kind::Braid:
      return env.braiding(b.x, b.y);
    case Box::Kind::BraidInv:
      return env.braiding_inverse(b.x, b.y);
    case Box::Kind::Ev: {
      long n = env.dim(b.x);
      Matrix m(f, 1, n * n);
      for (long i = 0; i < n; ++i) m.at(0, i * n + i) = Scalar::one(f);
      return m;
    }
    case Box::Kind::Coev: {
      long n = env.dim(b.x);
      Matrix m(f, n * n, 1);
      for (long i = 0; i < n; ++i) m.at(i * n + i, 0) = Scalar::one(f);
      return m;
    }
    case Box::Kind::Flip:
      return flip_map(f, env.dim(b.x), env.dim(b.y));
    case Box::Kind::Custom:
      return b.matrix;
  }
  throw UnresolvedBox("unknown kind");
}

long wires_dim(const std::vector<std::string>& wires, const DiagramEnv& env) {
  long d = 1;
  for (const auto& w : wires) d *= env.dim(w);
  return d;
}

std::string wires_str(const std::vector<std::string>& wires) {
  std::string s = "[";
  for (size_t i = 0; i < wires.size(); ++i) s += (i ? " " : "") + wires[i];
  return s + "]";
}

}  // namespace

Matrix compile(const Diagram& d, const DiagramEnv& env) {
  std::vector<std::string> wires = d.inputs;
  Matrix total = Matrix::identity(env.field(), wires_dim(wires, env));
  for (size_t li = 0; li < d.layers.size(); ++li) {
    std::vector<std::string> expected, produced;
    Matrix layer = Matrix::identity(env.field(), 1);
    for (const Box& b : d.layers[li]) {
      Matrix m = box_matrix(b, env);
      for (const auto& w : b.inputs()) expected.push_back(w);
      for (const auto& w : b.outputs()) produced.push_back(w);
      if (m.rows() != wires_dim(b.outputs(), env) || m.cols() != wires_dim(b.inputs(), env))
        throw DimMismatch("box tensor shape in layer " + std::to_string(li));
      layer = kron(layer, m);
    }
    if (expected != wires)
      throw WireMismatch("layer " + std::to_string(li) + ": expects " + wires_str(expected) +
                         ", gets " + wires_str(wires));
    total = layer * total;
    wires = std::move(produced);
  }
  return total;
}

bool diagrams_equal(const Diagram& a, const Diagram& b, const DiagramEnv& env) {
  if (a.inputs != b.inputs) throw WireMismatch("diagrams_equal: different inputs");
  return compile(a, env) == compile(b, env);
}

}  // namespace hopflab
