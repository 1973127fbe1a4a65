#pragma once

#include <string>
#include <vector>

namespace hopflab {

// One verified identity.  On failure, `witness` holds the lexicographically
// first failing basis multi-index together with both sides.
struct AxiomCheck {
  std::string axiom;
  bool pass = true;
  std::string witness;
};

struct AxiomReport {
  std::string subject;
  std::vector<AxiomCheck> checks;

  bool ok() const;
  const AxiomCheck* first_failure() const;
  void add(std::string axiom, bool pass, std::string witness = {});
  void merge(const AxiomReport& sub, const std::string& prefix = {});
  std::string summary() const;
};

}  // namespace hopflab
