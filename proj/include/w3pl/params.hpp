#pragma once

namespace w3pl {

/// Parameter triple (kappa, alpha, beta) of the wrapped three-parameter
/// Lindley family. All three must be finite and strictly positive, which
/// also guarantees alpha*kappa + beta > 0.
class W3plParams {
public:
    W3plParams(double kappa, double alpha, double beta);

    double kappa() const { return kappa_; }
    double alpha() const { return alpha_; }
    double beta() const { return beta_; }

    bool operator==(const W3plParams&) const = default;

private:
    double kappa_;
    double alpha_;
    double beta_;
};

/// Parameters of the unwrapped (positive-support) three-parameter Lindley
/// distribution. Same constraints as W3plParams.
class LinearParams3PL {
public:
    LinearParams3PL(double kappa, double alpha, double beta);

    double kappa() const { return kappa_; }
    double alpha() const { return alpha_; }
    double beta() const { return beta_; }

private:
    double kappa_;
    double alpha_;
    double beta_;
};

}  // namespace w3pl
