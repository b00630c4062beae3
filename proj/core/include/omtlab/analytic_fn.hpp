#pragma once

#include <memory>
#include <optional>
#include <string>
#include <string_view>

#include "omtlab/complex.hpp"

namespace omtlab {

// Entire function of one complex variable, represented as an immutable
// expression tree over {constant, z, sum, product, integer power n>=0,
// exp, composition}. There are no rational nodes, so every tree is
// defined on all of C and its structural derivative stays in the set.
class AnalyticFn {
public:
    enum class Kind { Constant, Variable, Sum, Product, Power, Exp, Compose };

    static AnalyticFn constant(Complex c);
    static AnalyticFn variable();
    static AnalyticFn sum(AnalyticFn lhs, AnalyticFn rhs);
    static AnalyticFn product(AnalyticFn lhs, AnalyticFn rhs);
    static AnalyticFn power(AnalyticFn base, int exponent);  // exponent >= 0
    static AnalyticFn exponential(AnalyticFn arg);
    static AnalyticFn compose(AnalyticFn outer, AnalyticFn inner);  // outer(inner(z))

    // Grammar: literals (`1.5`, `2+3i`), `z`, `+`, `*`, `^n`, `exp(...)`,
    // parentheses. `-` between terms is accepted as sugar for `+-1*`.
    // Throws ParseError.
    static AnalyticFn parse(std::string_view text);

    // Canonical printed form; parse(to_string()) re-prints identically.
    std::string to_string() const;

    // Throws EvaluationOverflowError if any intermediate is non-finite.
    Complex eval(Complex z) const;

    // Exact structural derivative (sum/product/power/chain rules),
    // returned in simplified form. Never a finite difference.
    AnalyticFn derivative() const;

    // Constant folding and identity elimination; value-preserving.
    AnalyticFn simplified() const;

    // True iff the function is not identically constant. Decided by
    // simplifying the derivative and probing it at 16 fixed points
    // {0.5*e^{i*pi*k/8} : k=0..15}; nonzero at any probe => nonconstant.
    bool is_nonconstant() const;

    Kind kind() const;
    // If the tree is a single constant node, its value.
    std::optional<Complex> constant_value() const;

    bool same_tree(const AnalyticFn& other) const;

    struct Node;

private:
    explicit AnalyticFn(std::shared_ptr<const Node> root) : root_(std::move(root)) {}
    std::shared_ptr<const Node> root_;
};

struct CircleSpec {
    Complex center;
    double radius = 0.0;  // > 0
};

struct CircleMin {
    double m = 0.0;            // min over samples of |f(z)-v|, golden-refined
    double argmin_angle = 0.0; // angle attaining the reported minimum
    double tolerance = 0.0;    // Lipschitz bound on how far the true min can sit below m
};

// Minimum of |f(z)-v| over K uniformly spaced points of the circle,
// refined by one golden-section pass on the minimizing arc. The reported
// m is an upper estimate of the true minimum; `tolerance` bounds the gap
// via a sampled bound on |f'| along the circle. Requires K >= 64.
CircleMin min_on_circle(const AnalyticFn& f, CircleSpec circle, Complex v, int K);

}  // namespace omtlab
