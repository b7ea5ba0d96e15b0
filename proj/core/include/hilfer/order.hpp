#pragma once

namespace hilfer {

/// Order alpha in (0,1) and type beta in [0,1] of the Hilfer derivative.
/// gamma = alpha + beta - alpha*beta is always recomputed from the pair.
class FractionalOrder {
public:
    FractionalOrder(double alpha, double beta);

    [[nodiscard]] double alpha() const noexcept { return alpha_; }
    [[nodiscard]] double beta() const noexcept { return beta_; }
    [[nodiscard]] double gamma() const noexcept { return gamma_; }

    /// Exponent 1 - gamma of the weight carried by solutions.
    [[nodiscard]] double solution_weight() const noexcept { return 1.0 - gamma_; }

private:
    double alpha_;
    double beta_;
    double gamma_;
};

}  // namespace hilfer
