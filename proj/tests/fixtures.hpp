#pragma once

#include "mathon/projective.hpp"

#include <vector>

// frozen expected values for the distinguished seed (index 0)

namespace mathon::testing {

inline Subspace line(std::initializer_list<std::initializer_list<int>> rows) {
    return Subspace::span_of_rows(Matrix::from_rows(rows, 3));
}

// the six fixed lines, as printed
inline std::vector<Subspace> printed_f6() {
    return {
        line({{1, 0, 1, 2, 2, 0}, {0, 1, 1, 0, 2, 2}}), // fixed by CD
        line({{1, 0, 1, 2, 1, 1}, {0, 1, 1, 0, 2, 0}}),
        line({{1, 0, 0, 2, 0, 1}, {0, 1, 1, 1, 2, 1}}),
        line({{1, 0, 0, 2, 2, 0}, {0, 1, 1, 1, 2, 2}}),
        line({{1, 0, 2, 2, 1, 1}, {0, 1, 0, 2, 2, 0}}), // fixed by DC
        line({{1, 0, 2, 2, 0, 1}, {0, 1, 0, 2, 2, 1}}),
    };
}

// the fifteen induced lines, as printed
inline std::vector<Subspace> printed_f15() {
    return {
        line({{1, 0, 2, 2, 2, 2}, {0, 1, 0, 2, 0, 2}}),
        line({{1, 0, 0, 0, 0, 1}, {0, 1, 0, 0, 2, 1}}),
        line({{1, 0, 1, 0, 2, 2}, {0, 1, 0, 1, 0, 2}}),
        line({{0, 0, 1, 0, 1, 2}, {0, 0, 0, 1, 1, 0}}),
        line({{1, 0, 0, 2, 1, 0}, {0, 1, 1, 1, 0, 1}}),
        line({{0, 0, 1, 0, 1, 1}, {0, 0, 0, 1, 2, 0}}),
        line({{1, 0, 2, 0, 0, 0}, {0, 1, 2, 2, 0, 0}}),
        line({{1, 0, 1, 2, 0, 0}, {0, 1, 1, 0, 0, 0}}),
        line({{1, 0, 1, 0, 0, 0}, {0, 1, 0, 1, 0, 0}}),
        line({{1, 0, 2, 0, 2, 0}, {0, 1, 2, 2, 2, 2}}),
        line({{1, 0, 0, 0, 1, 0}, {0, 1, 0, 0, 0, 1}}),
        line({{0, 0, 1, 0, 1, 0}, {0, 0, 0, 1, 0, 1}}),
        line({{1, 0, 0, 0, 2, 2}, {0, 1, 0, 0, 0, 2}}),
        line({{1, 0, 2, 0, 1, 0}, {0, 1, 2, 2, 0, 1}}),
        line({{1, 0, 1, 0, 1, 1}, {0, 1, 0, 1, 2, 0}}),
    };
}

// products of the two stabilizer generators, as printed
inline Matrix printed_cd() {
    return Matrix::from_rows({{1, 2, 1, 2, 1, 2},
                              {1, 0, 1, 0, 1, 0},
                              {0, 0, 0, 0, 1, 2},
                              {0, 0, 0, 0, 0, 1},
                              {0, 2, 0, 0, 0, 0},
                              {1, 0, 0, 0, 0, 0}},
                             3);
}

inline Matrix printed_dc() {
    return Matrix::from_rows({{0, 0, 0, 0, 2, 2},
                              {0, 0, 0, 0, 2, 1},
                              {1, 1, 0, 0, 0, 0},
                              {0, 1, 0, 0, 0, 0},
                              {0, 1, 0, 1, 0, 1},
                              {2, 1, 2, 1, 2, 1}},
                             3);
}

// the eight 2x2 matrices with Y - I invertible and Y + I of rank 1
inline std::vector<Matrix> printed_eight() {
    std::vector<std::vector<std::vector<int>>> vals = {
        {{0, 1}, {2, 1}}, {{0, 2}, {1, 1}}, {{1, 1}, {2, 0}}, {{1, 2}, {1, 0}},
        {{2, 0}, {1, 2}}, {{2, 0}, {2, 2}}, {{2, 1}, {0, 2}}, {{2, 2}, {0, 2}}};
    std::vector<Matrix> out;
    for (const auto& v : vals) out.push_back(Matrix::from_rows(v, 3));
    return out;
}

} // namespace mathon::testing
