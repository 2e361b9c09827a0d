#pragma once

#include <array>
#include <string>
#include <vector>

#include "tsx/intervals.hpp"

namespace tsx::testing_support {

/// The published 40-per-class interval table (classes Se, Ve, Vi; features SL, SW, PL, PW).
inline IntervalModel reference_model() {
    return IntervalModel({"Se", "Ve", "Vi"}, {"SL", "SW", "PL", "PW"},
                         {Interval(4.4, 5.8), Interval(2.3, 4.4), Interval(1.0, 1.9), Interval(0.1, 0.6),
                          Interval(4.9, 7.0), Interval(2.0, 3.4), Interval(3.0, 5.1), Interval(1.0, 1.7),
                          Interval(4.9, 7.9), Interval(2.2, 3.8), Interval(4.5, 6.9), Interval(1.4, 2.5)});
}

/// Published per-feature class probabilities (columns SL, SW, PL, PW).
inline std::vector<std::array<double, 3>> published_columns() {
    return {{0.3058, 0.4148, 0.2794}, {0.2748, 0.3516, 0.3736}, {0.1391, 0.3801, 0.4808}, {0.1563, 0.3737, 0.4700}};
}

}  // namespace tsx::testing_support
