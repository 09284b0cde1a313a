#pragma once

#include "murlab/induced_paths.hpp"
#include "murlab/params.hpp"
#include "murlab/recognize.hpp"

#include <string>
#include <variant>

namespace murlab {

/// Lower bound 0, or upper bound max(n − 2, 0).
struct TrivialBound {
    int value = 0;
};

/// Induced linear forest in G (or its complement).
struct PathForestBound {
    PathForestWitness witness;
    bool on_complement = false;
};

/// Two vertices at distance `distance`; a shortest path between them is induced.
struct DiameterBound {
    int u = 0, v = 0, distance = 0;
    bool on_complement = false;
};

/// level 1: G is neither complete nor empty; level 2: additionally outside
/// the mur = 1 shapes.
struct OutsideSmallClasses {
    int level = 1;
};

/// n − c for c components of G (or its complement).
struct ComponentBound {
    int components = 0;
    bool on_complement = false;
};

/// n − m − 1 where m is the largest multiplicity of a nonzero Laplacian eigenvalue.
struct LaplacianMultiplicity {
    int multiplicity = 0;
    bool on_complement = false;
};

/// Exact value n − 1 − max(m, c − 1) of a regular graph of degree `degree`
/// with c components, m being the largest multiplicity among the adjacency
/// eigenvalues other than the degree.
struct RegularSpectrum {
    int multiplicity = 0;
    int components = 0;
    int degree = 0;
};

/// Closed-form value for a recognized family.
struct FamilyFormula {
    FamilyMatch match;
    int value = 0;
};

/// A parameter point whose universal matrix has the stored rank.
struct ExplicitParams {
    RationalPoint point{0, 0, 0};
    int rank = 0;
};

using LowerCertificate =
    std::variant<TrivialBound, PathForestBound, DiameterBound, OutsideSmallClasses, FamilyFormula, RegularSpectrum>;
using UpperCertificate =
    std::variant<TrivialBound, ComponentBound, LaplacianMultiplicity, RegularSpectrum, FamilyFormula, ExplicitParams>;

template <class Certificate>
struct Bound {
    int value = 0;
    Certificate certificate;
};

using LowerBound = Bound<LowerCertificate>;
using UpperBound = Bound<UpperCertificate>;

namespace detail {

inline std::string complement_suffix(bool on_complement) { return on_complement ? " in complement" : ""; }

inline std::string forest_shape(const PathForestWitness& w) {
    std::string out;
    for (const auto& p : w.paths) out += (out.empty() ? "P" : "∪P") + std::to_string(p.size());
    if (w.isolated.size() == 1) out += "∪K1";
    if (w.isolated.size() > 1) out += "∪" + std::to_string(w.isolated.size()) + "K1";
    return out;
}

struct CertificateLabel {
    bool lower;
    std::string operator()(const TrivialBound& c) const {
        return lower ? "trivial" : "order bound n-2=" + std::to_string(c.value);
    }
    std::string operator()(const PathForestBound& c) const {
        return "induced " + forest_shape(c.witness) + complement_suffix(c.on_complement);
    }
    std::string operator()(const DiameterBound& c) const {
        return "diameter " + std::to_string(c.distance) + complement_suffix(c.on_complement);
    }
    std::string operator()(const OutsideSmallClasses& c) const {
        return c.level >= 2 ? "outside mur<=1 shapes" : "neither complete nor empty";
    }
    std::string operator()(const ComponentBound& c) const {
        return "components c=" + std::to_string(c.components) + complement_suffix(c.on_complement);
    }
    std::string operator()(const LaplacianMultiplicity& c) const {
        return "laplacian multiplicity m=" + std::to_string(c.multiplicity) + complement_suffix(c.on_complement);
    }
    std::string operator()(const RegularSpectrum& c) const {
        return "regular spectrum: m=" + std::to_string(c.multiplicity);
    }
    std::string operator()(const FamilyFormula& c) const { return "family:" + describe(c.match); }
    std::string operator()(const ExplicitParams& c) const {
        return "params " + to_string(c.point) + " rank " + std::to_string(c.rank);
    }
};

}  // namespace detail

inline std::string label(const LowerCertificate& c) { return std::visit(detail::CertificateLabel{true}, c); }
inline std::string label(const UpperCertificate& c) { return std::visit(detail::CertificateLabel{false}, c); }

}  // namespace murlab
