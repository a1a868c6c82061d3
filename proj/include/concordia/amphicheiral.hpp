#pragma once

// Paired-crossing-change machinery for strongly positive amphicheiral forms:
// the square factorization Delta(V^{-1}) = (c(t)+1)^2 Delta(V^0), and the
// algebraic sliceness certificate built from the explicit metabolizer
// (G(t), F(t)) together with the Witt-triviality of C (+) -C^t.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "concordia/alexander.hpp"
#include "concordia/concordance.hpp"
#include "concordia/error.hpp"
#include "concordia/seifert.hpp"
#include "concordia/signatures.hpp"
#include "concordia/witt.hpp"

namespace concordia {

// T^2 = I and T^t A T = -A^t, exactly.
inline bool check_equivariance(const IntMatrix& a, const IntMatrix& t) {
    return equivariance_holds(a, t);
}

struct HKCertificate {
    AmphicheiralData data;
    SeifertMatrix v_minus_plus;  // eps = 0
    SeifertMatrix v_plus_minus;  // eps = -1
    RatFunc c_of_t;
    RatFunc d_of_t;
    HermitianForm c_block;  // C = [[c, 1-t], [1-tbar, -z^2 eps]] for eps = -1
    LaurentPoly delta_plus_minus, delta_minus_plus;
    std::optional<LaurentPoly> F, G;  // square roots (up to units) of the two polynomials
    bool c_symmetric = false;
    bool lower_block_identity = false;  // (1,1) of the lower 2x2 equals -c
    bool d_zero = false;
    bool block_diagonal_identity = false;  // W^eps = A_t (+) C (+) -C^t
    bool delta_identity = false;           // Delta(V^{-1}) = (c+1)^2 Delta(V^0)
    bool square_gate = false;              // is_square consistency gate on Delta(V^{-1})
};

inline HKCertificate hk_factorize(const AmphicheiralData& d) {
    HKCertificate cert;
    cert.data = d;
    AmphicheiralData d0 = d, d1 = d;
    d0.epsilon = 0;
    d1.epsilon = -1;
    cert.v_minus_plus = build_v_epsilon(d0);
    cert.v_plus_minus = build_v_epsilon(d1);
    size_t r = d.A.rows();

    SeifertMatrix a_wrapped = SeifertMatrix::validate(d.A);
    HermitianForm a_t = hermitianize(a_wrapped);
    if (r > 0 && det_ratfunc(a_t.matrix()).is_zero()) fail(ErrorKind::SingularIntermediate, "A_t is singular");
    RfMatrix a_t_inv =
        r > 0 ? inverse_field(a_t.matrix(), [](const RatFunc& f) { return f.is_zero(); }, RatFunc::one())
              : RfMatrix(0, 0);

    RatFunc z2 = detail::rf_z_squared();
    RatFunc z4 = z2 * z2;
    std::vector<RatFunc> acol = detail::rf_column(d.a);
    std::vector<RatFunc> tta(r, RatFunc::zero());  // T^t a
    for (size_t i = 0; i < r; ++i)
        for (size_t j = 0; j < r; ++j)
            if (d.a[j] != 0) tta[i] += RatFunc(Rational(d.T(j, i))) * RatFunc(Rational(d.a[j]));

    cert.c_of_t = -(z2 * RatFunc(Rational(d.b))) - z4 * detail::bilinear(acol, a_t_inv, acol);
    cert.d_of_t = z4 * detail::bilinear(acol, a_t_inv, tta);
    cert.c_symmetric = cert.c_of_t == cert.c_of_t.involute();
    cert.d_zero = cert.d_of_t.is_zero();

    RatFunc omt = detail::rf_one_minus_t();
    RatFunc omtb = detail::rf_one_minus_tbar();

    // the displayed base change P, applied to both hermitianized matrices
    auto reduce_eps = [&](const SeifertMatrix& v) {
        HermitianForm vt = hermitianize(v);
        RfMatrix p = RfMatrix::identity(r + 4, RatFunc::one(), RatFunc::zero());
        if (r > 0) {
            std::vector<RatFunc> u = detail::mat_vec(a_t_inv, acol);
            std::vector<RatFunc> w = detail::mat_vec(a_t_inv, tta);
            for (size_t i = 0; i < r; ++i) {
                p(i, r) = z2 * u[i];
                p(i, r + 2) = -(z2 * w[i]);
            }
        }
        return congruence(vt, p);
    };
    HermitianForm w0 = reduce_eps(cert.v_minus_plus);
    HermitianForm w1 = reduce_eps(cert.v_plus_minus);

    auto c_for = [&](const Rational& eps) {
        return RfMatrix{{cert.c_of_t, omt}, {omtb, -(z2 * RatFunc(eps))}};
    };
    auto neg_c_transpose = [&](const RfMatrix& c) {
        RfMatrix out = c.transpose();  // plain transpose, no conjugation
        return -out;
    };
    auto check_block = [&](const HermitianForm& w, const Rational& eps) {
        RfMatrix c = c_for(eps);
        RfMatrix expected = RfMatrix::block_diag(RfMatrix::block_diag(a_t.matrix(), c), neg_c_transpose(c));
        return w.matrix() == expected;
    };
    bool lower0 = w0.entry(r + 2, r + 2) == -cert.c_of_t;
    bool lower1 = w1.entry(r + 2, r + 2) == -cert.c_of_t;
    cert.lower_block_identity = lower0 && lower1;
    bool cross0 = w0.entry(r, r + 2).is_zero() && w0.entry(r + 2, r).is_zero();
    bool cross1 = w1.entry(r, r + 2).is_zero() && w1.entry(r + 2, r).is_zero();
    cert.d_zero = cert.d_zero && cross0 && cross1;
    cert.block_diagonal_identity = check_block(w0, Rational(0)) && check_block(w1, Rational(-1));
    cert.c_block = HermitianForm(c_for(Rational(-1)));

    cert.delta_plus_minus = alexander(cert.v_plus_minus);
    cert.delta_minus_plus = alexander(cert.v_minus_plus);
    RatFunc cp1 = cert.c_of_t + RatFunc::one();
    cert.delta_identity =
        RatFunc(cert.delta_plus_minus) == cp1 * cp1 * RatFunc(cert.delta_minus_plus);

    cert.F = is_square_up_to_units(cert.delta_plus_minus);
    cert.G = is_square_up_to_units(cert.delta_minus_plus);
    cert.square_gate = cert.F.has_value();

    if (!cert.c_symmetric) fail(ErrorKind::IdentityFailure, "c(t) is not fixed by the involution");
    if (!cert.lower_block_identity) fail(ErrorKind::IdentityFailure, "lower block entry is not -c(t)");
    if (!cert.d_zero) fail(ErrorKind::IdentityFailure, "d(t) does not vanish");
    if (!cert.block_diagonal_identity) fail(ErrorKind::IdentityFailure, "V^eps_t is not congruent to A_t (+) C (+) -C^t");
    if (!cert.delta_identity) fail(ErrorKind::IdentityFailure, "Delta(V^{-1}) != (c+1)^2 Delta(V^0)");
    return cert;
}

// ---------------------------------------------------------------------------
// Long's certificate: explicit metabolizer plus Witt-trivial C (+) -C^t.

struct LongCertificate {
    LaurentPoly F, G, delta;  // M = diag(F^2 delta, -G^2 delta)
    bool metabolizer_ok = false;
    bool c_block_trivial_ok = false;
    bool profile_zero_ok = false;
    size_t samples_checked = 0;
    std::vector<WittStep> reduction_log;
    bool verified = false;
};

inline LongCertificate long_certificate(const HKCertificate& cert, size_t sample_count = 50) {
    if (!cert.F || !cert.G)
        fail(ErrorKind::PreconditionFailed, "square factorization did not produce both F and G");
    LongCertificate out;
    out.F = *cert.F;
    out.G = *cert.G;
    out.delta = cert.delta_minus_plus;

    RatFunc f(out.F), g(out.G), delta(out.delta);
    HermitianForm m = HermitianForm::diagonal({f * f * delta, -(g * g * delta)});
    out.metabolizer_ok = verify_metabolizer(m, {{g, f}});

    // C (+) -C^t reduces by shared diagonalization
    Diagonalization dc = diagonalize(cert.c_block);
    RfMatrix neg_ct = -cert.c_block.matrix().transpose();
    Diagonalization dct = diagonalize(HermitianForm(neg_ct));
    std::vector<RatFunc> entries = dc.diag;
    for (const auto& d : dct.diag) entries.push_back(d);
    WittRepresentative red = witt_reduce(entries);
    out.reduction_log = red.provenance;
    out.c_block_trivial_ok = red.diag.empty();

    HermitianForm v1 = hermitianize(cert.v_plus_minus);
    HermitianForm v0 = hermitianize(cert.v_minus_plus);
    out.profile_zero_ok = true;
    for (const auto& [a, b] : standard_samples(sample_count)) {
        if (form_signature_at(v1, a, b) != form_signature_at(v0, a, b)) {
            out.profile_zero_ok = false;
            break;
        }
        ++out.samples_checked;
    }
    out.verified = out.metabolizer_ok && out.c_block_trivial_ok && out.profile_zero_ok;
    return out;
}

inline LongCertificate long_certificate(const AmphicheiralData& d, size_t sample_count = 50) {
    return long_certificate(hk_factorize(d), sample_count);
}

// ---------------------------------------------------------------------------
// Telescoping walks of paired crossing changes.

struct PairedWalkReport {
    std::vector<LongCertificate> steps;
    bool verified = false;
};

// Each step converts the knot of V^{-1} into the knot of V^0; consecutive
// steps must agree on the intermediate Alexander polynomial and the walk
// must end at trivial polynomial.
inline PairedWalkReport paired_crossing_walk(const std::vector<AmphicheiralData>& steps,
                                             size_t sample_count = 25) {
    PairedWalkReport rep;
    if (steps.empty()) {
        rep.verified = true;
        return rep;
    }
    std::vector<HKCertificate> certs;
    certs.reserve(steps.size());
    for (const auto& d : steps) certs.push_back(hk_factorize(d));
    for (size_t i = 0; i + 1 < certs.size(); ++i)
        if (certs[i].delta_minus_plus != certs[i + 1].delta_plus_minus)
            fail(ErrorKind::ChainMismatch,
                 "step " + std::to_string(i) + " does not chain to step " + std::to_string(i + 1));
    if (certs.back().delta_minus_plus != LaurentPoly::one())
        fail(ErrorKind::ChainMismatch, "walk does not terminate at trivial Alexander polynomial");
    bool ok = true;
    for (const auto& c : certs) {
        LongCertificate lc = long_certificate(c, sample_count);
        ok = ok && lc.verified;
        rep.steps.push_back(std::move(lc));
    }
    rep.verified = ok;
    return rep;
}

}  // namespace concordia
