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

#ifndef PALAB_FIGURE_H_
#define PALAB_FIGURE_H_

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "palab/exact_dist.h"

namespace palab {

enum class FigurePanel { kLeft, kRight };

// Parses "left" / "right"; throws std::invalid_argument otherwise.
FigurePanel ParseFigurePanel(const std::string& name);

struct FigureColumn {
  std::string name;
  DegreeDistribution pmf;
};

struct FigureData {
  FigurePanel panel = FigurePanel::kLeft;
  uint64_t horizon = 0;
  std::vector<FigureColumn> columns;
};

inline constexpr uint64_t kFigureHorizon = 10000;

// Left: degree of v_1 at the horizon, unconditioned and conditioned on
// D(100) = 18 and D(1000) = 56. Right: total degree of {v_1..v_s} for
// s in {1, 20, 50}, started from its deterministic value 2s at time s.
FigureData ComputeFigure(FigurePanel panel, uint64_t horizon = kFigureHorizon);

// Columns "degree,<name>..." over the union of the supports.
void WriteFigureCsv(std::ostream& out, const FigureData& data);

}  // namespace palab

#endif  // PALAB_FIGURE_H_
