#pragma once

// Bundled worked examples: two rank-metric codes over GF(8)/F_2, a small
// 2x4 code, and an F_3-linear space of 3x3 matrices. The repro command and
// the acceptance suite replay these.

#include <vector>

#include "qmatroid/matrix.hpp"
#include "qmatroid/subspace.hpp"

namespace qmatroid::refdata {

inline FieldPtr gf8() { return Field::make(2, 3, {1, 1, 0, 1}); }  // alpha^3 = alpha + 1
inline FieldPtr f2() { return Field::make(2, 1); }
inline FieldPtr f3() { return Field::make(3, 1); }

inline Field::value_type apow(const FieldPtr& f, int k) {
    return f->pow(f->alpha(), k);
}

inline Matrix mat(const FieldPtr& f, int rows, int cols,
                  const std::vector<std::vector<Field::value_type>>& entries) {
    Matrix m(f, rows, cols);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) m.at(i, j) = entries[i][j];
    return m;
}

inline Subspace sp(const FieldPtr& f, int n, const std::vector<std::vector<int>>& gens) {
    std::vector<Subspace::Vector> rows;
    for (const auto& g : gens) rows.emplace_back(g.begin(), g.end());
    return Subspace::span(f, n, rows);
}

/// 2 x 5 generator over GF(8): the first worked example.
inline Matrix g_first() {
    auto f = gf8();
    const auto a = f->alpha();
    return mat(f, 2, 5,
               {{1, a, 1, apow(f, 2), apow(f, 4)},
                {apow(f, 3), apow(f, 4), apow(f, 4), 1, 1}});
}

/// 2 x 4 generator over GF(8): the lattice-reconstruction example.
inline Matrix g_2x4() {
    auto f = gf8();
    const auto a = f->alpha();
    return mat(f, 2, 4, {{1, 0, 0, 0}, {0, 1, a, apow(f, 2)}});
}

/// 3 x 5 generator over GF(8): the [5,3] code example.
inline Matrix g_rankfinal() {
    auto f = gf8();
    const auto a = f->alpha();
    return mat(f, 3, 5,
               {{1, a, 1, 0, apow(f, 2)},
                {0, 1, apow(f, 5), apow(f, 2), a},
                {0, 0, 1, apow(f, 4), a}});
}

/// The eleven cyclic spaces A_0..A_10 of the [5,3] example's matroid.
inline std::vector<Subspace> a_spaces(const FieldPtr& f) {
    return {
        sp(f, 5, {}),                                          // A0
        sp(f, 5, {{1, 0, 0, 1, 1}, {0, 1, 0, 1, 0}}),          // A1
        sp(f, 5, {{1, 0, 1, 0, 0}, {0, 0, 0, 1, 0}}),          // A2
        sp(f, 5, {{0, 0, 1, 0, 1}, {1, 1, 0, 1, 1}}),          // A3
        sp(f, 5, {{0, 0, 1, 0, 1}, {0, 1, 0, 0, 0}, {0, 0, 0, 1, 0}}),  // A4
        sp(f, 5, {{0, 1, 0, 0, 0}, {1, 0, 0, 0, 1}, {0, 0, 1, 1, 1}}),  // A5
        sp(f, 5, {{1, 0, 0, 0, 1}, {0, 1, 0, 1, 0}, {0, 0, 1, 1, 1}}),  // A6
        sp(f, 5, {{1, 0, 0, 0, 1}, {0, 1, 0, 0, 0}, {0, 0, 1, 0, 1}}),  // A7
        sp(f, 5, {{1, 0, 0, 1, 1}, {0, 1, 0, 0, 0}, {0, 0, 1, 1, 1}}),  // A8
        sp(f, 5, {{1, 0, 0, 0, 1}, {0, 1, 1, 0, 1}, {0, 0, 0, 1, 0}}),  // A9
        sp(f, 5, {{1, 0, 0, 0, 1}, {0, 1, 0, 0, 0}, {0, 0, 1, 0, 1}, {0, 0, 0, 1, 0}}),  // A10
    };
}

/// The eleven flats F_0..F_10 of the dual matroid in the same example.
inline std::vector<Subspace> f_spaces(const FieldPtr& f) {
    return {
        sp(f, 5, {{1, 0, 1, 0, 1}}),                           // F0
        sp(f, 5, {{1, 0, 1, 0, 1}, {0, 0, 0, 1, 0}}),          // F1
        sp(f, 5, {{1, 0, 1, 0, 1}, {0, 0, 0, 1, 1}}),          // F2
        sp(f, 5, {{1, 0, 1, 0, 1}, {0, 1, 1, 0, 0}}),          // F3
        sp(f, 5, {{0, 0, 1, 0, 1}, {1, 0, 0, 0, 0}}),          // F4
        sp(f, 5, {{1, 0, 1, 0, 1}, {0, 1, 1, 1, 0}}),          // F5
        sp(f, 5, {{1, 0, 0, 1, 1}, {0, 0, 1, 1, 0}}),          // F6
        sp(f, 5, {{1, 0, 0, 0, 1}, {0, 1, 0, 1, 1}, {0, 0, 1, 0, 0}}),  // F7
        sp(f, 5, {{1, 0, 1, 0, 0}, {0, 1, 0, 0, 0}, {0, 0, 0, 0, 1}}),  // F8
        sp(f, 5, {{1, 0, 0, 1, 0}, {0, 1, 0, 1, 0}, {0, 0, 1, 1, 1}}),  // F9
        Subspace::full(f, 5),                                  // F10
    };
}

/// Z = <e1+e5, e2+e5, e3+e5, e4+e5> and the three 2-dim circuits inside it
/// called out in the example.
inline Subspace z_space(const FieldPtr& f) {
    return sp(f, 5, {{1, 0, 0, 0, 1}, {0, 1, 0, 0, 1}, {0, 0, 1, 0, 1}, {0, 0, 0, 1, 1}});
}
inline std::vector<Subspace> z_named_circuits(const FieldPtr& f) {
    return {
        sp(f, 5, {{1, 0, 1, 0, 0}, {0, 1, 0, 0, 1}}),
        sp(f, 5, {{0, 1, 1, 1, 1}, {1, 0, 0, 0, 1}}),
        sp(f, 5, {{1, 0, 0, 1, 0}, {0, 1, 0, 1, 0}}),
    };
}

/// The four 3x3 matrices over F_3 spanning the matrix code of the
/// polymatroid example, and its four distinguished lines.
inline std::vector<Matrix> mats_3x3() {
    auto f = f3();
    return {
        mat(f, 3, 3, {{1, 2, 1}, {1, 2, 2}, {1, 1, 1}}),
        mat(f, 3, 3, {{0, 2, 1}, {2, 1, 1}, {0, 1, 2}}),
        mat(f, 3, 3, {{2, 2, 0}, {1, 1, 1}, {0, 1, 2}}),
        mat(f, 3, 3, {{0, 2, 2}, {0, 0, 0}, {2, 0, 1}}),
    };
}
inline std::vector<Subspace> c_lines_3x3(const FieldPtr& f) {
    return {
        sp(f, 3, {{1, 1, 2}}),
        sp(f, 3, {{0, 0, 1}}),
        sp(f, 3, {{1, 0, 1}}),
        sp(f, 3, {{0, 1, 0}}),
    };
}

}  // namespace qmatroid::refdata
