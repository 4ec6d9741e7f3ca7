#pragma once

#include <utility>
#include <vector>

#include "mbb/ordstruct.hpp"
#include "mbb/prebasis.hpp"
#include "mbb/ring.hpp"

namespace mbb {

/// Reduced Gröbner basis of the submodule generated by gens (Buchberger,
/// normal selection strategy). Sorted by leading term, σ-descending.
std::vector<VecP> groebner_basis(const std::vector<VecP> &gens,
                                 const TermOrder &o);

/// Full reduction of v modulo a Gröbner basis.
VecP gb_normal_form(const std::vector<VecP> &gb, const VecP &v,
                    const TermOrder &o);

bool gb_member(const std::vector<VecP> &gb, const VecP &v, const TermOrder &o);

/// True iff every component contains pure powers of all variables among
/// the leading terms, i.e. P^r / <gb> is finite dimensional.
bool finite_codimension(const std::vector<VecP> &gb, const TermOrder &o,
                        std::size_t nvars, std::size_t rank);

/// O_σ(U): the terms outside the leading term module. Throws MathError when
/// the complement is infinite or needs terms of degree above bound.
OrderModule macaulay_complement(const std::vector<VecP> &gb, const TermOrder &o,
                                std::size_t nvars, std::size_t rank,
                                unsigned bound = 64);

/// Border basis via G_j = b_j - NF(b_j) over O_σ(U).
std::pair<OrderModule, Prebasis>
naive_border_basis(const std::vector<VecP> &gens, const TermOrder &o,
                   std::size_t nvars, std::size_t rank, unsigned bound = 64);

/// Generators of Syz(f_1..f_r) as vectors of rank r.
std::vector<VecP> syzygies(const std::vector<Poly> &f, const TermOrder &o);

/// Coefficient tuples q_w (rank |f|) with Σ_v q_vw f_v generating I ∩ J
/// for I = <h>, J = <f>.
std::vector<VecP> ideal_intersection(const std::vector<Poly> &h,
                                     const std::vector<Poly> &f,
                                     const TermOrder &o);

/// Polynomials as rank-1 vectors and back.
VecP as_vector(const Poly &p);
Poly as_poly(const VecP &v);

} // namespace mbb
