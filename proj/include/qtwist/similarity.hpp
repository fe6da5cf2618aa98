#pragma once

#include <cstdint>
#include <vector>

#include "qtwist/local_rep.hpp"
#include "qtwist/rational.hpp"

namespace qtwist {

// Similarity of local representations: same variant and central character,
// isomorphic up to twisting by the order-2 unramified character (for
// special and supercuspidal representations), and for principal series the
// unit-character pair matches up to swap with equal phase sums mod 1.
bool same_class(const LocalRep& a, const LocalRep& b);

// The Weyl-law local constant of the class containing rep:
//   special                       q - 1
//   supercuspidal, type I         dim rho
//   supercuspidal, type II        (q + 1)/2 * dim rho
//   principal series              1 when c(chi1 chi2^{-1}) = 0, else
//                                 2 (q^c + q^{c-1}) / (q^{floor(c/2)} + 1)
Rational local_constant(const LocalRep& rep);

struct SimilarityClass {
  LocalRep representative;  // canonical modulo unramified order-2 twist and swap
  Rational constant;
  std::int64_t prime() const { return representative.prime(); }
};

SimilarityClass make_similarity_class(const LocalRep& rep);

struct ClassInventory {
  std::int64_t p;
  std::int64_t conductor;
  std::vector<SimilarityClass> classes;
  Rational sum_constants;
};

// The complete census of similarity classes with trivial central character
// at conductor exponent c in {0, 1, 2}.  At c = 2 this is: the ramified
// quadratic Steinberg twist, the ramified-quadratic-pair principal series,
// the (p-3)/2 ramified principal series classes, and the (p-1)/2 type I
// supercuspidal classes of dimension p - 1.
ClassInventory enumerate_classes(std::int64_t p, std::int64_t conductor);

struct ClassSums {
  std::int64_t total;            // = p^2 - p - 1
  std::int64_t invariant_total;  // = p^2 - 2p - 1
};

// Sums of the c = 2 class constants, computed by enumeration: all classes,
// and only those invariant under the ramified quadratic twist.
ClassSums class_sums(std::int64_t p);

// Leading coefficient (in T^2) of the counting function of weight-0
// trivial-character newforms of level q: (1/12) * prod over p^e || q of the
// class-constant sum at conductor exponent e.  Requires q odd and cube-free.
Rational newform_weyl_constant(std::int64_t q);

}  // namespace qtwist
