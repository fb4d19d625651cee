#pragma once

// Chern data of a rank-2 bundle specification and the invariants of the
// induced family of triple covers:
//
//   kappa_C  = 3 kappa_S + 2 c1(E)^2 + 4 c1(E).omega_S - 3 c2(E)
//   lambda_C = lambda_S + (kappa_S + delta_S)/6 + c1(E)^2/2 + c1(E).omega_S/2
//              - c2(E) + sum_p chi(p)
//   delta_C  = 12 lambda_C - kappa_C          (for the coarse family)

#include "trislope/chi.hpp"
#include "trislope/surface.hpp"

#include <optional>
#include <stdexcept>
#include <utility>

namespace trislope {

enum class BundleKind { Split, Extension };

// Rank-2 bundle given by two line classes: the two summands of a split bundle,
// or the sub/quotient classes of an extension. Chern data depends only on the
// pair; `kind` is kept because it decides which boundary stratum the special
// fiber lands in.
class BundleSpec {
public:
    BundleSpec(BundleKind kind, DivisorClass first, DivisorClass second)
        : kind_(kind), first_(std::move(first)), second_(std::move(second)) {
        if (first_.surface() != second_.surface())
            throw std::invalid_argument("BundleSpec: summands live on different surfaces (" +
                                        surface_name(first_.surface()) + " vs " +
                                        surface_name(second_.surface()) + ")");
    }

    BundleKind kind() const { return kind_; }
    const DivisorClass& first() const { return first_; }
    const DivisorClass& second() const { return second_; }
    SurfaceId surface() const { return first_.surface(); }

private:
    BundleKind kind_;
    DivisorClass first_;
    DivisorClass second_;
};

struct ChernData {
    DivisorClass c1;
    Rational c1sq;
    Rational c1dotOmega;
    Rational c2;
};

inline ChernData chern(const SurfaceModel& S, const BundleSpec& E) {
    if (E.surface() != S.id())
        throw std::invalid_argument("chern: bundle on " + surface_name(E.surface()) +
                                    " evaluated on " + surface_name(S.id()));
    DivisorClass c1 = E.first() + E.second();
    Rational c1sq = intersect(S, c1, c1);
    Rational c1w = intersect(S, c1, S.omega());
    Rational c2 = intersect(S, E.first(), E.second());
    return ChernData{std::move(c1), std::move(c1sq), std::move(c1w), std::move(c2)};
}

struct CoverInvariants {
    Rational lambda;
    Rational kappa;
    Rational deltaRaw;       // 12 lambda - kappa, always
    Rational deltaAdjusted;  // deltaRaw minus the rational-tail correction
    Rational chiTotal;
};

inline CoverInvariants kappa_lambda(const SurfaceModel& S, const BundleSpec& E,
                                    std::optional<Rational> chiOverride = std::nullopt) {
    const ChernData ch = chern(S, E);

    Rational chiTotal = 0;
    if (chiOverride) {
        chiTotal = *chiOverride;
    } else {
        for (const OrbiPoint& p : S.orbi_points())
            chiTotal += chi(ChiQuery(p.n, p.a, p.b));
    }

    CoverInvariants inv;
    inv.kappa = Rational(3) * S.kappaS() + Rational(2) * ch.c1sq + Rational(4) * ch.c1dotOmega -
                Rational(3) * ch.c2;
    inv.lambda = S.lambdaS() + (S.kappaS() + S.deltaS()) / Rational(6) + ch.c1sq / Rational(2) +
                 ch.c1dotOmega / Rational(2) - ch.c2 + chiTotal;
    inv.deltaRaw = Rational(12) * inv.lambda - inv.kappa;
    inv.deltaAdjusted = inv.deltaRaw;
    inv.chiTotal = chiTotal;
    return inv;
}

// Rational tails of the special fiber inflate delta; each test-curve row knows
// its correction (0, 1, 2 or 3).
inline CoverInvariants adjust_delta(CoverInvariants inv, const Rational& adjustment) {
    inv.deltaAdjusted = inv.deltaRaw - adjustment;
    return inv;
}

} // namespace trislope
