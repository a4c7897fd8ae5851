#pragma once

#include <string>
#include <vector>

#include "algebra/brackets.hpp"
#include "algebra/verdict.hpp"
#include "exact/errors.hpp"

namespace netlts {

/// Skew symmetry in the first two slots, the cyclic identity and the
/// fundamental identity, in that order.
Report verify_lts(const TriBracket& b, const CheckOptions& options = {});
/// Fundamental identity only.
Report verify_3leibniz(const TriBracket& b, const CheckOptions& options = {});
/// Antisymmetry and Jacobi.
Report verify_lie(const BiBracket& b, const CheckOptions& options = {});

/// Thrown when a validated wrapper is built from a bracket that fails its axioms.
class AxiomError : public InputError {
 public:
  AxiomError(const std::string& what, Report report) : InputError(what), report_(std::move(report)) {}
  const Report& report() const { return report_; }

 private:
  Report report_;
};

std::vector<std::string> default_labels(std::size_t dim, const std::string& stem = "e");

class LieTripleSystem {
 public:
  static LieTripleSystem make(TriBracket b, std::vector<std::string> labels = {});

  std::size_t dim() const { return bracket_.dim(); }
  const TriBracket& bracket() const { return bracket_; }
  const std::vector<std::string>& labels() const { return labels_; }
  Vector operator()(const Vector& x, const Vector& y, const Vector& z) const { return bracket_.apply(x, y, z); }

 private:
  LieTripleSystem(TriBracket b, std::vector<std::string> labels) : bracket_(std::move(b)), labels_(std::move(labels)) {}
  TriBracket bracket_;
  std::vector<std::string> labels_;
};

class ThreeLeibnizAlgebra {
 public:
  static ThreeLeibnizAlgebra make(TriBracket b, std::vector<std::string> labels = {});

  std::size_t dim() const { return bracket_.dim(); }
  const TriBracket& bracket() const { return bracket_; }
  const std::vector<std::string>& labels() const { return labels_; }
  Vector operator()(const Vector& x, const Vector& y, const Vector& z) const { return bracket_.apply(x, y, z); }

 private:
  ThreeLeibnizAlgebra(TriBracket b, std::vector<std::string> labels) : bracket_(std::move(b)), labels_(std::move(labels)) {}
  TriBracket bracket_;
  std::vector<std::string> labels_;
};

class LieAlgebra {
 public:
  static LieAlgebra make(BiBracket b, std::vector<std::string> labels = {});

  std::size_t dim() const { return bracket_.dim(); }
  const BiBracket& bracket() const { return bracket_; }
  const std::vector<std::string>& labels() const { return labels_; }
  Vector operator()(const Vector& x, const Vector& y) const { return bracket_.apply(x, y); }

 private:
  LieAlgebra(BiBracket b, std::vector<std::string> labels) : bracket_(std::move(b)), labels_(std::move(labels)) {}
  BiBracket bracket_;
  std::vector<std::string> labels_;
};

/// Basis of {x : [x,y,z] = 0 for all y, z}.
std::vector<Vector> center(const LieTripleSystem& alg);
std::vector<Vector> center(const TriBracket& b);
/// Basis of the span of all products [x,y,z].
std::vector<Vector> derived_subsystem(const LieTripleSystem& alg);
std::vector<Vector> derived_subsystem(const TriBracket& b);

/// Checks f[x,y,z] = [fx,fy,fz] on basis triples; f maps src into dst.
Verdict tri_homomorphism(const TriBracket& src, const TriBracket& dst, const Matrix& f, std::string identity,
                         const CheckOptions& options = {});

/// The three-dimensional system with [e1,e2,e1] = e3 = -[e2,e1,e1].
LieTripleSystem l3_system();

}  // namespace netlts
