#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hypunits/cayley.hpp"
#include "hypunits/green.hpp"
#include "hypunits/verdict.hpp"

namespace hypunits {

enum class PaperVerdict { YesPerPaper, NoPerPaper, OutOfTheoremScope };
enum class TheoremPath { Thm2, Thm3, Thm4, None };
enum class TType { T2, T2Prime, T2Hat };

const char* to_string(PaperVerdict v);
const char* to_string(TheoremPath p);
const char* to_string(TType t);

struct FactorCertificate {
  ElemSet j_class;
  std::string recognition;  // Group, GroupWithZero, Null, ReesMatrix, Other
  std::string identified;   // e.g. "C5", "M12", "abelian exponent 4", ""
  std::string list;         // abelian-exp-4-6, hamiltonian-2-group, K-cyclic, K-groups, K-rees, none
  bool allowed = false;     // cites an allowed list (ordinary G or a K list)
};

struct KCertificate {
  std::string name;
  std::string list;
  ElemSet elements;
};

struct LambdaMu {
  Rational lambda, mu;
  Rational sum() const { return lambda + mu; }
};

struct ClassificationReport {
  PaperVerdict verdict = PaperVerdict::NoPerPaper;
  TheoremPath theorem_path = TheoremPath::None;
  std::vector<FactorCertificate> factor_certificates;
  std::optional<KCertificate> k_certificate;
  std::optional<TType> t_type;
  std::optional<LambdaMu> lambda_mu;
  std::vector<std::string> notes;
};

ClassificationReport classify_semigroup(const CayleyTable& s, TieBreak tie = TieBreak::LeastFirst);

enum class Agreement { Agree, Disagree, OracleOnly };
const char* to_string(Agreement a);

struct CrosscheckRecord {
  std::string input_id;
  ClassificationReport paper;
  AlgebraVerdict oracle;
  Agreement agreement = Agreement::Agree;
  std::string discrepancy_note;
};

CrosscheckRecord crosscheck(const CayleyTable& s, const std::string& input_id = "");

}  // namespace hypunits
