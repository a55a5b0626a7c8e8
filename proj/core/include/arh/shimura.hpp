#pragma once

#include <arh/common.hpp>
#include <arh/fields.hpp>
#include <arh/heights.hpp>
#include <arh/symbolic.hpp>

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace arh {

// Closed-form Petersson row: h_pet + 1/2 + (1/[F:Q]) zeta_F'(-1)/zeta_F(-1) = constant.
struct Table1Row {
  RamIndices indices;
  std::string field_id;
  LogCombo constant;
};

// Fano row: h_can(-K) - 1/2 (1 + log pi) = value.
struct Table2Row {
  RamIndices indices;
  LogCombo value;
};

const std::vector<Table1Row>& table1_rows();
const std::vector<Table2Row>& table2_rows();

// Exact h_pet of a row: constant - 1/2 - D(F).
LogCombo table1_pet_closed_form(const Table1Row& row);
// lc_eval(row) minus the numerical value computed by the heights module.
double table1_residual(const Table1Row& row);
double table2_residual(const Table2Row& row);

struct RamifiedPrime {
  long norm = 0;   // N(p)
  long prime = 0;  // rational prime under p
};

struct OptimalModel {
  RamIndices ram_indices;
  std::optional<RamIndices> four_point;  // indices at 0, +-1, infinity before the square map
  std::optional<long> shift_a;           // boundary point a of the canonical model, if not 1
  LogCombo pet_closed_form;
  LogCombo correction;
};

struct ShimuraCase {
  std::string id;
  std::string description;
  FieldSpec field;
  std::vector<RamifiedPrime> ramified;
  std::vector<long> orbifold_indices;  // RamIndices::kInfinity for a cusp
  OptimalModel optimal;
  Rational k_degree;
  std::map<long, Rational> expected_h;
};

// Throws DomainError on a broken case record.
void validate_case(const ShimuraCase& c);
ShimuraCase case_from_json(const std::string& text);
std::string case_to_json(const ShimuraCase& c);

// The four compiled-in cases: modular, disc6, Qsqrt3, Qsqrt6.
const std::vector<ShimuraCase>& builtin_cases();
const ShimuraCase& builtin_case(const std::string& id);

LogCombo yuan_height(const ShimuraCase& c);
LogCombo optimal_pet_height(const ShimuraCase& c);

// Petersson height of the model with boundary point a instead of 1,
// from the optimal one by the coordinate change z = a * zeta.
LogCombo shifted_pet_height(const ShimuraCase& c);

class NonCancellationError : public DomainError {
public:
  using DomainError::DomainError;
};

struct HpResult {
  LogCombo difference;              // yuan - optimal
  std::map<long, Rational> h_hat;   // log p coefficients of the difference
  std::map<long, Rational> h;       // h_hat * 2 * k_degree
};

HpResult h_p_analysis(const ShimuraCase& c);
std::map<long, Rational> h_p_map(const ShimuraCase& c);

Rational orbifold_degree(const RamIndices& m);
Rational orbifold_degree(const std::vector<long>& indices);

}  // namespace arh
