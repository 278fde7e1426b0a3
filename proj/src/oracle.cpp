#include "qnash/oracle.hpp"

#include <algorithm>
#include <ostream>
#include <stdexcept>
#include <utility>

#include "qnash/game_io.hpp"

namespace qnash {

QueryLedger::QueryLedger(int k)
    : k_(k),
      per_row_(k, 0),
      per_col_(k, 0),
      cells_(static_cast<size_t>(k) * k),
      col_zero_b_(k, 0) {
  if (k < 1) throw std::invalid_argument("QueryLedger: k must be positive");
}

void QueryLedger::write_csv(std::ostream& out) const {
  out << "row,col,a,b,order\n";
  // Distinct cells in first-query order.
  std::vector<const Cell*> order;
  std::vector<std::pair<int, int>> coords;
  order.reserve(static_cast<size_t>(distinct_));
  coords.reserve(static_cast<size_t>(distinct_));
  for (int i = 0; i < k_; ++i) {
    for (int j = 0; j < k_; ++j) {
      const Cell& cell = cells_[index(i, j)];
      if (cell.count > 0) {
        order.push_back(&cell);
        coords.emplace_back(i, j);
      }
    }
  }
  std::vector<size_t> idx(order.size());
  for (size_t i = 0; i < idx.size(); ++i) idx[i] = i;
  std::sort(idx.begin(), idx.end(), [&](size_t a, size_t b) {
    return order[a]->first_order < order[b]->first_order;
  });
  for (size_t i : idx) {
    out << coords[i].first << ',' << coords[i].second << ',' << format_double(order[i]->a)
        << ',' << format_double(order[i]->b) << ',' << order[i]->first_order << '\n';
  }
}

std::vector<int> unresolved_columns(const QueryLedger& ledger) {
  std::vector<int> out;
  for (int j = 0; j < ledger.k(); ++j)
    if (!ledger.column_has_zero_b(j)) out.push_back(j);
  return out;
}

BudgetedOracle::BudgetedOracle(QueryOracle& inner, int64_t budget)
    : inner_(inner), budget_(budget) {
  if (budget < 0) throw std::invalid_argument("BudgetedOracle: negative budget");
}

ZeroSumTransformOracle::ZeroSumTransformOracle(QueryOracle& inner, double scale)
    : inner_(inner), scale_(scale) {
  if (!(scale > 0.0) || scale > 1.0)
    throw std::invalid_argument("ZeroSumTransformOracle: scale must be in (0,1]");
}

}  // namespace qnash
