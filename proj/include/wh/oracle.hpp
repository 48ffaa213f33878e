#pragma once

#include <array>
#include <string>
#include <vector>

#include "wh/algebra.hpp"
#include "wh/partitions.hpp"

namespace wh {

struct Genericity {
    bool ok = true;
    std::string witness;  // the violating choice when !ok
};

// eigs[j] = (a_{j,1}, ..., a_{j,N}) in F_q^*, q prime.
Genericity genericity_check(int q, const std::vector<std::vector<int>>& eigs, bool strong);

// GL_n(F_p) for n in {1, 2}, with the involution x -> J x^{-T} J^{-1}.
class FiniteGL {
public:
    using Mat = std::array<int, 4>;  // row major; n = 1 uses entry 0 only

    FiniteGL(int n, int p);

    int n() const { return n_; }
    int p() const { return p_; }
    long order() const { return static_cast<long>(elems_.size()); }
    const std::vector<Mat>& elements() const { return elems_; }
    long index_of(const Mat& x) const;

    Mat identity() const;
    Mat mul(const Mat& x, const Mat& y) const;
    Mat inv(const Mat& x) const;
    Mat sigma(const Mat& x) const;
    int det(const Mat& x) const;

    // Conjugacy classes.
    int class_count() const { return static_cast<int>(class_size_.size()); }
    int class_of(const Mat& x) const;
    long class_size(int c) const { return class_size_[c]; }
    const Mat& class_rep(int c) const { return class_rep_[c]; }
    long centralizer_order(const Mat& x) const { return order() / class_size_[class_of(x)]; }

    // diag(a, a^-1) for n = 2, [1] for n = 1.
    Mat twisted_rep(const std::vector<int>& eig) const;

private:
    long code(const Mat& x) const;
    int key_id(const Mat& x) const;

    int n_, p_;
    std::vector<Mat> elems_;
    std::vector<long> index_;  // code -> element index or -1
    std::vector<int> class_key_;  // key -> class id or -1
    std::vector<long> class_size_;
    std::vector<Mat> class_rep_;
    std::vector<int> inverse_;  // F_p inverses
};

enum class ClassMode { orbit, geometric };

// Elements x with x*sigma in the class of rep*sigma: a single orbit
// {g rep sigma(g)^-1}, or every x with x sigma(x) conjugate to rep sigma(rep).
std::vector<long> twisted_class(const FiniteGL& G, const FiniteGL::Mat& rep, ClassMode mode);

// Class function on G stored by class id.
using ClassFunction = std::vector<Int>;

// #{(A, B) : [A, B] = x} at each class.
ClassFunction commutator_counts(const FiniteGL& G);
ClassFunction convolve(const FiniteGL& G, const ClassFunction& f, const ClassFunction& h);
// #{(x1, x2) in C1 x C2 : x1 sigma(x2) = y} at each class.
ClassFunction pair_distribution(const FiniteGL& G, const std::vector<long>& c1, const std::vector<long>& c2);
ClassFunction pair_distribution_serial(const FiniteGL& G, const std::vector<long>& c1, const std::vector<long>& c2);

struct PointCount {
    Int solutions;  // |Rep|
    Int points;     // |Rep| / |G|
};

// |Rep| by convolution of class functions; classes.size() must be even.
Int count_solutions(const FiniteGL& G, int g, const std::vector<std::vector<long>>& classes);
// Throws MathError if |G| does not divide |Rep|.
PointCount count_points(const FiniteGL& G, int g, const std::vector<std::vector<long>>& classes);
// Direct enumeration of all tuples; tiny groups only.
Int count_solutions_direct(const FiniteGL& G, int g, const std::vector<std::vector<long>>& classes);

// Character data of a group H with an index-2 normal subgroup N, restricted to
// the sigma-stable irreducible characters of N and the N-classes in H \ N.
struct CharTable {
    Int n_order;
    std::vector<Int> class_sizes;       // N-classes in H \ N
    std::vector<Int> degrees;           // chi(1)
    std::vector<std::vector<Rat>> ext;  // ext[chi][class] = extended character value
};

// Throws MathError when the result is not an integer.
Int frobenius_count(const CharTable& t, int g, const std::vector<int>& classes);

// Dihedral group of order 2m with N the rotations. Outer N-classes:
// one class for m odd, two (even and odd reflections) for m even.
CharTable dihedral_table(int m);
Int dihedral_direct_count(int m, int g, const std::vector<int>& classes);

// Character of the hyperoctahedral group of rank m (m <= 3) labelled by
// alpha, at the class of signed cycle type beta (positive cycles, negative
// cycles), from explicit signed permutation matrices.
Int wreath_group_char(const BiPartition& alpha, const BiPartition& beta);

}  // namespace wh
