#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <vector>

#include "qnash/game.hpp"

namespace qnash {

// Answer to one payoff query: a is the row-player payoff at the queried
// cell, b the column-player payoff.
struct QueryAnswer {
  double a = 0.0;
  double b = 0.0;
  bool operator==(const QueryAnswer&) const = default;
};

// Exact record of every query made through an oracle. Repeat queries to the
// same cell are counted again (the model does not memoize); the per-cell
// record keeps the answer and the 1-based sequence number of the first
// query, which is all the adversary completions need.
class QueryLedger {
 public:
  explicit QueryLedger(int k);

  int k() const { return k_; }
  int64_t total_count() const { return total_; }
  int64_t per_row_count(int i) const { return per_row_[i]; }
  int64_t per_column_count(int j) const { return per_col_[j]; }
  const std::vector<int64_t>& per_row_counts() const { return per_row_; }
  const std::vector<int64_t>& per_column_counts() const { return per_col_; }

  // Number of distinct cells answered.
  int64_t distinct_count() const { return distinct_; }

  std::optional<QueryAnswer> answered(int i, int j) const {
    const Cell& cell = cells_[index(i, j)];
    if (cell.count == 0) return std::nullopt;
    return QueryAnswer{cell.a, cell.b};
  }
  int64_t cell_count(int i, int j) const { return cells_[index(i, j)].count; }

  // True if some recorded answer in column j has b == 0.
  bool column_has_zero_b(int j) const { return col_zero_b_[j] != 0; }

  void record(int i, int j, QueryAnswer answer) {
    Cell& cell = cells_[index(i, j)];
    ++total_;
    ++per_row_[i];
    ++per_col_[j];
    if (cell.count == 0) {
      cell.a = answer.a;
      cell.b = answer.b;
      cell.first_order = total_;
      ++distinct_;
    }
    ++cell.count;
    if (answer.b == 0.0) col_zero_b_[j] = 1;
  }

  // CSV export: header `row,col,a,b,order`, one line per distinct answered
  // cell in first-query order; `order` is the 1-based sequence number of
  // that first query.
  void write_csv(std::ostream& out) const;

 private:
  struct Cell {
    double a = 0.0;
    double b = 0.0;
    int64_t count = 0;
    int64_t first_order = 0;
  };

  size_t index(int i, int j) const { return static_cast<size_t>(i) * k_ + j; }

  int k_ = 0;
  int64_t total_ = 0;
  int64_t distinct_ = 0;
  std::vector<int64_t> per_row_;
  std::vector<int64_t> per_col_;
  std::vector<Cell> cells_;
  std::vector<char> col_zero_b_;
};

// Columns with no recorded zero column-player payoff. Against a
// hidden-column instance these are exactly the columns the querying
// algorithm cannot yet distinguish from the hidden one.
std::vector<int> unresolved_columns(const QueryLedger& ledger);

// The payoff-query interface. Algorithms interact with games only through
// Query(i, j), which returns the answer pair or, once a configured budget is
// spent, std::nullopt. The exhausted signal is a result variant rather than
// an exception so harnesses can record partial progress. Out-of-range
// indices throw std::out_of_range.
//
// One oracle instance is single-threaded (its ledger mutates); distinct
// instances may run on distinct threads.
class QueryOracle {
 public:
  virtual ~QueryOracle() = default;
  virtual int k() const = 0;
  virtual PayoffRange range() const = 0;
  virtual std::optional<QueryAnswer> query(int i, int j) = 0;
  virtual const QueryLedger& ledger() const = 0;
};

// Base for oracles that own their ledger: counts the query, then delegates
// the answer to the concrete rule. The rule sees the ledger state from
// strictly before the current query.
class CountingOracle : public QueryOracle {
 public:
  explicit CountingOracle(int k) : ledger_(k) {}

  int k() const override { return ledger_.k(); }
  const QueryLedger& ledger() const override { return ledger_; }

  std::optional<QueryAnswer> query(int i, int j) final {
    if (i < 0 || i >= k() || j < 0 || j >= k())
      throw std::out_of_range("QueryOracle: cell index out of range");
    QueryAnswer answer = answer_query(i, j);
    ledger_.record(i, j, answer);
    return answer;
  }

 protected:
  virtual QueryAnswer answer_query(int i, int j) = 0;
  QueryLedger ledger_;
};

// Answers from a fixed, fully known game.
class MatrixOracle final : public CountingOracle {
 public:
  explicit MatrixOracle(BimatrixGame game)
      : CountingOracle(game.k()), game_(std::move(game)) {}

  PayoffRange range() const override { return game_.range(); }
  const BimatrixGame& game() const { return game_; }

 protected:
  QueryAnswer answer_query(int i, int j) override {
    return {game_.r(i, j), game_.c(i, j)};
  }

 private:
  BimatrixGame game_;
};

// Enforces a hard cap on the number of answered queries. The ledger is the
// inner oracle's, so budget accounting survives mixed direct/wrapped use.
// Attempts past the budget signal exhaustion and leave the ledger unchanged.
class BudgetedOracle final : public QueryOracle {
 public:
  BudgetedOracle(QueryOracle& inner, int64_t budget);

  int k() const override { return inner_.k(); }
  PayoffRange range() const override { return inner_.range(); }
  const QueryLedger& ledger() const override { return inner_.ledger(); }
  int64_t budget() const { return budget_; }

  std::optional<QueryAnswer> query(int i, int j) override {
    if (inner_.ledger().total_count() >= budget_) return std::nullopt;
    return inner_.query(i, j);
  }

 private:
  QueryOracle& inner_;
  int64_t budget_;
};

// View of an underlying (R, C) oracle as the zero-sum game
// (scale*(R-C), -scale*(R-C)). Every query passes through to the inner
// oracle, so query accounting charges the true game exactly once.
class ZeroSumTransformOracle final : public QueryOracle {
 public:
  ZeroSumTransformOracle(QueryOracle& inner, double scale);

  int k() const override { return inner_.k(); }
  PayoffRange range() const override { return PayoffRange::symmetric(); }
  const QueryLedger& ledger() const override { return inner_.ledger(); }

  std::optional<QueryAnswer> query(int i, int j) override {
    std::optional<QueryAnswer> raw = inner_.query(i, j);
    if (!raw) return std::nullopt;
    double d = scale_ * (raw->a - raw->b);
    return QueryAnswer{d, -d};
  }

 private:
  QueryOracle& inner_;
  double scale_;
};

}  // namespace qnash
