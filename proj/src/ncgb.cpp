#include "qsym/ncgb.hpp"

namespace qsym {

std::string to_string(VerdictStatus s) {
  switch (s) {
    case VerdictStatus::ZeroCertified: return "zero";
    case VerdictStatus::NonzeroCertified: return "nonzero";
    case VerdictStatus::Inconclusive: return "inconclusive";
    case VerdictStatus::BudgetExceeded: return "budget";
  }
  return "inconclusive";
}

VerdictStatus verdict_status_from_string(const std::string& s) {
  if (s == "zero") return VerdictStatus::ZeroCertified;
  if (s == "nonzero") return VerdictStatus::NonzeroCertified;
  if (s == "inconclusive") return VerdictStatus::Inconclusive;
  if (s == "budget") return VerdictStatus::BudgetExceeded;
  throw ParseError("unknown verdict status '" + s + "'");
}

}  // namespace qsym
