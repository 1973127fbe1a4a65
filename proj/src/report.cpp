#include "hopflab/report.hpp"

#include <sstream>

namespace hopflab {

bool AxiomReport::ok() const {
  for (const auto& c : checks)
    if (!c.pass) return false;
  return true;
}

const AxiomCheck* AxiomReport::first_failure() const {
  for (const auto& c : checks)
    if (!c.pass) return &c;
  return nullptr;
}

void AxiomReport::add(std::string axiom, bool pass, std::string witness) {
  checks.push_back(AxiomCheck{std::move(axiom), pass, std::move(witness)});
}

void AxiomReport::merge(const AxiomReport& sub, const std::string& prefix) {
  for (const auto& c : sub.checks)
    checks.push_back(AxiomCheck{prefix.empty() ? c.axiom : prefix + "." + c.axiom, c.pass, c.witness});
}

std::string AxiomReport::summary() const {
  std::ostringstream os;
  os << (subject.empty() ? "checks" : subject) << ": " << (ok() ? "pass" : "FAIL");
  for (const auto& c : checks) {
    if (!c.pass) {
      os << "\n  " << c.axiom << ": FAIL";
      if (!c.witness.empty()) os << " at " << c.witness;
    }
  }
  return os.str();
}

}  // namespace hopflab
