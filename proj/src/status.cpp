#include "qnash/status.hpp"

namespace qnash {

const char* to_string(RunStatus status) {
  switch (status) {
    case RunStatus::kOk:
      return "ok";
    case RunStatus::kBudgetExhausted:
      return "budgetExhausted";
    case RunStatus::kConversionRejected:
      return "conversionRejected";
    case RunStatus::kLocateFailed:
      return "locateFailed";
  }
  return "unknown";
}

}  // namespace qnash
