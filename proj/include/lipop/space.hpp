#pragma once

// Finite-dimensional complex normed spaces standing in for the Banach spaces
// X and Y, with the induced operator norms the criteria need:
//   l1 -> anything : exact column maximum
//   l2 -> l2       : largest singular value (power iteration on A^H A)
//   linf -> linf   : maximum row sum
// Other pairs are rejected.

#include <string>
#include <vector>

#include "lipop/errors.hpp"
#include "lipop/fn.hpp"

namespace lipop {

enum class NormKind { l1, l2, linf };

std::string to_string(NormKind k);
NormKind norm_kind_from_string(const std::string& s);

struct NormedSpace {
    int dim = 1;
    NormKind norm = NormKind::l2;

    bool operator==(const NormedSpace&) const = default;
};

struct Vec {
    NormedSpace space;
    std::vector<cplx> entries;
};

// Dense row-major m x n matrix acting X -> Y.
struct Mat {
    NormedSpace domain;   // X, n columns
    NormedSpace codomain; // Y, m rows
    std::vector<cplx> entries;

    cplx at(int i, int j) const { return entries[static_cast<std::size_t>(i) * domain.dim + j]; }
    cplx& at(int i, int j) { return entries[static_cast<std::size_t>(i) * domain.dim + j]; }
};

Vec make_vec(NormedSpace space, std::vector<cplx> entries);
Mat make_mat(NormedSpace domain, NormedSpace codomain, std::vector<cplx> entries);

double vec_norm(const Vec& v);
Vec mat_vec(const Mat& A, const Vec& x);

Vec vec_add(const Vec& a, const Vec& b);
Vec vec_sub(const Vec& a, const Vec& b);
Vec vec_scale(cplx c, const Vec& a);

// Induced operator norm sup_{||x||<=1} ||A x||; throws
// UnsupportedNormPairError outside the supported pairs.
double op_norm(const Mat& A);

// A unit vector (in the domain norm) with ||A x|| = op_norm(A) up to the
// power-iteration tolerance; exact for the l1 and linf routes.
Vec opnorm_maximizer(const Mat& A);

} // namespace lipop
