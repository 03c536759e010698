#pragma once

#include <stdexcept>
#include <string>

namespace cubical {

/// Error conditions raised by the library. Every throw site uses fail()
/// so callers can dispatch on the code instead of parsing messages.
enum class Errc {
    duplicate_vertex,
    unknown_endpoint,
    disconnected,
    self_loop,
    not_median,
    theta_not_transitive,
    not_pairwise_crossing,
    too_few_hyperplanes,
    not_parallel,
    not_strongly_separated,
    not_uber_separated,
    not_convex,
    not_geodesic,
    not_adjacency_preserving,
    not_injective,
    overflow,
    domain_too_small,
    not_fc_type,
    no_oracle,
    unknown_generator,
    bad_parameters,
};

inline const char* errc_name(Errc c) {
    switch (c) {
        case Errc::duplicate_vertex:         return "DuplicateVertex";
        case Errc::unknown_endpoint:         return "UnknownEndpoint";
        case Errc::disconnected:             return "Disconnected";
        case Errc::self_loop:                return "SelfLoop";
        case Errc::not_median:               return "NotMedian";
        case Errc::theta_not_transitive:     return "ThetaNotTransitive";
        case Errc::not_pairwise_crossing:    return "NotPairwiseCrossing";
        case Errc::too_few_hyperplanes:      return "TooFewHyperplanes";
        case Errc::not_parallel:             return "NotParallel";
        case Errc::not_strongly_separated:   return "NotStronglySeparated";
        case Errc::not_uber_separated:       return "NotUberSeparated";
        case Errc::not_convex:               return "NotConvex";
        case Errc::not_geodesic:             return "NotGeodesic";
        case Errc::not_adjacency_preserving: return "NotAdjacencyPreserving";
        case Errc::not_injective:            return "NotInjective";
        case Errc::overflow:                 return "Overflow";
        case Errc::domain_too_small:         return "DomainTooSmall";
        case Errc::not_fc_type:              return "NotFCType";
        case Errc::no_oracle:                return "NoOracle";
        case Errc::unknown_generator:        return "UnknownGenerator";
        case Errc::bad_parameters:           return "BadParameters";
    }
    return "Unknown";
}

class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& what)
        : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

    Errc code() const noexcept { return code_; }

private:
    Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& what) {
    throw Error(code, what);
}

}  // namespace cubical
