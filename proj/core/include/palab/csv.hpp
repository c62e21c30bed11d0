#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace palab {

/// %.17g — round-trips doubles exactly, so identical runs give identical bytes.
std::string fmt17(double v);

/// Minimal CSV emitter: comma-joined cells, '\n' rows, header first.
class CsvWriter {
 public:
  explicit CsvWriter(std::ostream& out) : out_(out) {}

  void row(const std::vector<std::string>& cells);

 private:
  std::ostream& out_;
};

}  // namespace palab
