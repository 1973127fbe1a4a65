#pragma once

#include <map>
#include <string>
#include <vector>

#include "hopflab/hopf.hpp"

namespace hopflab {

// String diagrams as straight-line programs: a diagram is a stack of layers,
// each layer a left-to-right juxtaposition of boxes; wires are named objects.
// Layers apply top to bottom, wire order is tensor-factor order.

// Registry of objects and structure tensors the boxes resolve against.
// add_object also registers the coordinate dual "name*" of the same
// dimension, so evaluation boxes can be wired without extra setup.
class DiagramEnv {
 public:
  explicit DiagramEnv(const Field& f) : field_(f) {}

  const Field& field() const { return field_; }

  void add_object(const std::string& name, long dim);
  void register_algebra(const std::string& name, const Matrix& mult, const Matrix& unit);
  void register_coalgebra(const std::string& name, const Matrix& comult, const Matrix& counit);
  void register_antipode(const std::string& name, const Matrix& antipode);
  void register_hopf(const std::string& name, const Hopf& h);
  // Stores phi for Braid(x, y) and its inverse for BraidInv(x, y).
  void register_braiding(const std::string& x, const std::string& y, const Matrix& phi);

  long dim(const std::string& name) const;
  const Matrix& mult(const std::string& name) const;
  const Matrix& unit(const std::string& name) const;
  const Matrix& comult(const std::string& name) const;
  const Matrix& counit(const std::string& name) const;
  const Matrix& antipode(const std::string& name) const;
  const Matrix& braiding(const std::string& x, const std::string& y) const;
  const Matrix& braiding_inverse(const std::string& x, const std::string& y) const;

 private:
  Field field_;
  std::map<std::string, long> objects_;
  std::map<std::string, Matrix> mult_, unit_, comult_, counit_, antipode_;
  std::map<std::pair<std::string, std::string>, Matrix> braid_, braid_inv_;
};

struct Box {
  enum class Kind {
    Id,        // X -> X
    Mult,      // X (x) X -> X
    Comult,    // X -> X (x) X
    Unit,      // -> X
    Counit,    // X ->
    Antipode,  // X -> X
    Braid,     // X (x) Y -> Y (x) X, the registered braiding
    BraidInv,  // Y (x) X -> X (x) Y, its inverse
    Ev,        // X* (x) X ->
    Coev,      // -> X (x) X*
    Flip,      // X (x) Y -> Y (x) X, plain transposition
    Custom,    // any matrix with declared wires
  };

  Kind kind;
  std::string x, y;
  Matrix matrix;                           // Custom only
  std::vector<std::string> in_wires, out_wires;  // Custom only

  static Box id(std::string x);
  static Box mult(std::string x);
  static Box comult(std::string x);
  static Box unit(std::string x);
  static Box counit(std::string x);
  static Box antipode(std::string x);
  static Box braid(std::string x, std::string y);
  static Box braid_inv(std::string x, std::string y);
  static Box ev(std::string x);
  static Box coev(std::string x);
  static Box flip(std::string x, std::string y);
  static Box custom(Matrix m, std::vector<std::string> in, std::vector<std::string> out);

  std::vector<std::string> inputs() const;
  std::vector<std::string> outputs() const;
};

struct Diagram {
  std::vector<std::string> inputs;
  std::vector<std::vector<Box>> layers;
};

// Matrix of size (prod of output dims) x (prod of input dims).
// Throws WireMismatch if consecutive layers disagree, UnresolvedBox if a
// box has no registered tensor.
Matrix compile(const Diagram& d, const DiagramEnv& env);

// Exact equality of compiled matrices; inputs and outputs must agree.
bool diagrams_equal(const Diagram& a, const Diagram& b, const DiagramEnv& env);

}  // namespace hopflab
