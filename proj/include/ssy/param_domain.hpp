#pragma once

#include <string>

namespace ssy {

// A dimension n and stability exponent q. Every constant is a function of
// this pair. The constructor enforces n >= 2 and q >= 0 (q = 0 is admitted
// as the continuous extension of the open range).
struct ParamPoint {
    int n;
    double q;

    ParamPoint(int n, double q);

    friend bool operator==(const ParamPoint&, const ParamPoint&) = default;
};

// An interval of the real line with explicit openness flags. An empty interval
// is flagged and carries no endpoint semantics.
struct QInterval {
    double lower = 0.0;
    double upper = 0.0;
    bool lower_open = true;
    bool upper_open = true;
    bool empty = true;

    static QInterval open(double lower, double upper);
    static QInterval closed(double lower, double upper);
    static QInterval none() { return {}; }

    [[nodiscard]] bool contains(double q) const;
    [[nodiscard]] double width() const { return empty ? 0.0 : upper - lower; }
    [[nodiscard]] std::string to_string() const;
};

struct StructuralCoefficients {
    double alpha;    // coefficient of the cubic |H| u^3 term
    double okumura;  // bound on |tr(A°^3)| / u^3
    double kato;     // refined Kato factor for traceless symmetric 2-tensors
};

// A(n,q) = 2/n - q^2, evaluated with compensated arithmetic so that the
// relative error stays at the ulp level even when q is close to sqrt(2/n).
// Negative values are returned as-is.
double stability_gap(int n, double q);
inline double stability_gap(const ParamPoint& p) { return stability_gap(p.n, p.q); }

// B(q) = q^2 + 2q + 2.
double quadratic_aux(double q);

// D(n,q) = 1 + 2(1+q)/A + 8(1+q)B(q)/A^2. Throws DomainError when A <= 0.
double d_factor(const ParamPoint& p);

StructuralCoefficients structural_coefficients(int n);

// (0, sqrt(2/n)).
QInterval admissible_q_domain(int n);

// { q : max(0, (n-4)/2) < q < sqrt(2/n) }, empty for n >= 6.
QInterval bernstein_range(int n);

// n - 4 - 2q; negative exactly when the area-growth decay argument closes.
double decay_exponent(const ParamPoint& p);

// Throws DomainError unless A(n,q) > 0. Returns A.
double require_positive_gap(const ParamPoint& p);

void require_dimension(int n);

} // namespace ssy
