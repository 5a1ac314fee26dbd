// Copyright 2026 The pa-lab Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "palab/figure.h"

#include <algorithm>
#include <limits>
#include <ostream>
#include <stdexcept>

namespace palab {

FigurePanel ParseFigurePanel(const std::string& name) {
  if (name == "left") return FigurePanel::kLeft;
  if (name == "right") return FigurePanel::kRight;
  throw std::invalid_argument("figure panel must be 'left' or 'right', got '" +
                              name + "'");
}

FigureData ComputeFigure(FigurePanel panel, uint64_t horizon) {
  const ArithmeticMode mode = ArithmeticMode::Float();
  FigureData data;
  data.panel = panel;
  data.horizon = horizon;
  if (panel == FigurePanel::kLeft) {
    data.columns.push_back({"p_uncond", VertexDist(1, horizon, mode)});
    data.columns.push_back(
        {"p_cond100", ConditionalDist(100, 18, horizon, mode)});
    data.columns.push_back(
        {"p_cond1000", ConditionalDist(1000, 56, horizon, mode)});
  } else {
    for (uint64_t s : {1, 20, 50}) {
      data.columns.push_back({"p_set" + std::to_string(s),
                              ConditionalDist(s, 2 * s, horizon, mode)});
    }
  }
  return data;
}

void WriteFigureCsv(std::ostream& out, const FigureData& data) {
  uint64_t lo = std::numeric_limits<uint64_t>::max();
  uint64_t hi = 0;
  out << "degree";
  for (const FigureColumn& c : data.columns) {
    out << ',' << c.name;
    lo = std::min(lo, c.pmf.support_min());
    hi = std::max(hi, c.pmf.support_max());
  }
  out << '\n';
  const auto old_precision = out.precision(17);
  for (uint64_t d = lo; d <= hi && !data.columns.empty(); ++d) {
    out << d;
    for (const FigureColumn& c : data.columns) out << ',' << c.pmf.Probability(d);
    out << '\n';
  }
  out.precision(old_precision);
}

}  // namespace palab
