#pragma once

#include <set>
#include <string>
#include <vector>

#include "json.hpp"
#include "charcount/type_engine.hpp"

namespace charcount {

// Erratum: the printed value contradicts independent evidence recorded in the
// fixture, and the computed value matches the corrected one.
enum class CellStatus { Pass, Fail, Skip, Erratum };

struct GoldenCell {
  std::string id;
  CellStatus status = CellStatus::Pass;
  std::string expected;
  std::string actual;
  std::string detail;
};

struct GoldenReport {
  int figure = 0;
  std::string title;
  std::vector<GoldenCell> cells;

  int count(CellStatus s) const;
  bool ok() const { return count(CellStatus::Fail) == 0 && count(CellStatus::Erratum) == 0; }
  std::string to_text() const;
  nlohmann::json to_json() const;
};

std::vector<int> golden_figures();
// Fixture for a figure, from the compiled-in set.
nlohmann::json golden_fixture(int figure);

GoldenReport reproduce(int figure, const DataPtr& data, const ContextOptions& opts = {});
// Throws GoldenMismatch listing every failing cell.
void require_pass(const GoldenReport& report);

// A printed polynomial may elide its middle as "head + ... + tail". The head
// must match the top coefficients down to its lowest printed degree and the
// tail the bottom coefficients up to its highest.
bool matches_printed(const QPolynomial& p, const std::string& printed, std::string* why = nullptr);

// "D2xB1" -> "A1xA1xA1'" and so on, then canonical order.
std::string canonical_type_label(const std::string& label);
std::set<std::string> expand_isolated_row(const nlohmann::json& items, int n);

}  // namespace charcount
