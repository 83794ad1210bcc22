#pragma once

#include <string>
#include <utility>
#include <vector>

#include "qstab/errors.hpp"

namespace qstab {

/// Integer vector indexed by quiver vertices, in the order of
/// Quiver::vertex_names(). The universal currency of the library.
using DimVector = std::vector<long long>;
using IntMat = std::vector<std::vector<long long>>;

DimVector operator+(const DimVector& a, const DimVector& b);
DimVector operator-(const DimVector& a, const DimVector& b);
DimVector operator*(long long c, const DimVector& a);
long long total_dim(const DimVector& d);
bool is_nonnegative(const DimVector& d);
bool is_zero(const DimVector& d);
std::string dim_to_string(const DimVector& d);

enum class TypeClass { Dynkin, Euclidean, Wild };

/// Trichotomy by definiteness of the Tits form, with the graph shape
/// reported as series/rank. Wild carries no series.
struct QuiverType {
    TypeClass cls = TypeClass::Wild;
    char series = 0;  // 'A', 'D' or 'E'
    int rank = 0;

    bool is_dynkin() const { return cls == TypeClass::Dynkin; }
    bool is_euclidean() const { return cls == TypeClass::Euclidean; }
    bool is_wild() const { return cls == TypeClass::Wild; }
    std::string str() const;
};

/// Finite acyclic quiver with a fixed vertex order. Immutable after
/// construction; the Euler matrix, Coxeter matrices, type and delta are
/// computed eagerly so concurrent reads need no coordination.
class Quiver {
public:
    Quiver(std::vector<std::string> vertices,
           std::vector<std::pair<int, int>> arrows,
           bool allow_disconnected = false);

    /// Parses the JSON quiver document:
    ///   {"vertices": ["1","2"], "arrows": [["1","2"]]}
    /// Parallel arrows are allowed by repetition.
    static Quiver parse(const std::string& text, bool allow_disconnected = false);

    int size() const { return static_cast<int>(names_.size()); }
    const std::vector<std::string>& vertex_names() const { return names_; }
    const std::vector<std::pair<int, int>>& arrows() const { return arrows_; }
    bool connected() const { return connected_; }

    /// Euler matrix C with C[i][j] = delta_ij - #arrows(i -> j).
    const IntMat& euler_matrix() const { return euler_; }

    /// <d, e> = d^T C e = dim Hom - dim Ext^1 for the path algebra.
    long long euler_form(const DimVector& d, const DimVector& e) const;

    /// Tits form q(d) = <d, d>.
    long long tits_form(const DimVector& d) const { return euler_form(d, d); }

    /// Requires a connected quiver.
    const QuiverType& type() const;

    /// Minimal positive imaginary root: primitive positive generator of the
    /// radical of C + C^T. Requires Euclidean type.
    const DimVector& delta() const;

    /// defect(d) = <delta, d>. Requires Euclidean type.
    long long defect(const DimVector& d) const;

    /// Applies the Coxeter transform Phi = -C^{-T} C (or its inverse) to d.
    /// Realizes the AR translate tau on dimension vectors of non-projective
    /// (resp. non-injective) indecomposables.
    DimVector coxeter(const DimVector& d, bool inverse = false) const;

    /// Same vertices, all arrows reversed.
    Quiver opposite() const;

private:
    void check_dim(const DimVector& d) const;
    void compute_coxeter();
    void classify();

    std::vector<std::string> names_;
    std::vector<std::pair<int, int>> arrows_;
    IntMat euler_;
    IntMat phi_;
    IntMat phi_inv_;
    bool connected_ = false;
    bool has_type_ = false;
    QuiverType type_;
    DimVector delta_;  // empty unless Euclidean
};

}  // namespace qstab
