#include "hilfer/grid_function.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <utility>

#include "hilfer/error.hpp"

namespace hilfer {

WeightedGridFunction::WeightedGridFunction(MeshPtr mesh, double mu, std::vector<double> weighted_values)
    : mesh_(std::move(mesh)), mu_(mu), values_(std::move(weighted_values)) {
    require(mesh_ != nullptr, ErrorCode::InvalidArgument, "grid function needs a mesh");
    if (!(mu_ > -1.0 && mu_ < 1.0)) {
        std::ostringstream os;
        os << "weight exponent must lie in (-1, 1) (got " << mu_ << ")";
        fail(ErrorCode::WeightTooSingular, os.str());
    }
    require(values_.size() == mesh_->size(), ErrorCode::MeshMismatch, "value count does not match mesh size");
    for (std::size_t j = 0; j < values_.size(); ++j) {
        if (!std::isfinite(values_[j])) {
            std::ostringstream os;
            os << "weighted value at node " << j << " is not finite";
            fail(ErrorCode::InvalidArgument, os.str());
        }
    }
}

WeightedGridFunction::WeightedGridFunction(MeshPtr mesh, double mu)
    : WeightedGridFunction(mesh, mu, std::vector<double>(mesh ? mesh->size() : 0, 0.0)) {}

WeightedGridFunction WeightedGridFunction::sample(MeshPtr mesh, double mu,
                                                  const std::function<double(double, double)>& fn) {
    std::vector<double> v(mesh->size());
    for (std::size_t j = 0; j < v.size(); ++j) v[j] = fn(mesh->t(j), mesh->w(j));
    return {std::move(mesh), mu, std::move(v)};
}

WeightedGridFunction WeightedGridFunction::power(MeshPtr mesh, double mu, double coeff, double sigma) {
    const double e = sigma + mu;
    require(e >= 0.0, ErrorCode::WeightTooSingular, "power function is too singular for the requested weight");
    return sample(std::move(mesh), mu, [&](double, double w) {
        if (w == 0.0) return e == 0.0 ? coeff : 0.0;
        return coeff * std::pow(w, e);
    });
}

double WeightedGridFunction::unweighted(std::size_t j) const {
    if (mu_ == 0.0) return values_[j];
    if (j == 0 && mu_ < 0.0) return 0.0;
    return values_[j] * std::pow(mesh_->w(j), -mu_);
}

WeightedGridFunction WeightedGridFunction::reweighted(double new_mu) const {
    if (new_mu == mu_) return *this;
    std::vector<double> v(values_.size());
    const double shift = new_mu - mu_;
    for (std::size_t j = 1; j < v.size(); ++j) v[j] = values_[j] * std::pow(mesh_->w(j), shift);
    if (shift > 0.0) {
        v[0] = 0.0;
    } else {
        const double w1 = mesh_->w(1);
        const double w2 = mesh_->w(2);
        v[0] = v[1] - (v[2] - v[1]) * w1 / (w2 - w1);
    }
    return {mesh_, new_mu, std::move(v)};
}

bool WeightedGridFunction::compatible(const WeightedGridFunction& other) const noexcept {
    return mu_ == other.mu_ && mesh_->same_grid(*other.mesh_);
}

WeightedGridFunction& WeightedGridFunction::operator+=(const WeightedGridFunction& rhs) {
    require(compatible(rhs), ErrorCode::MeshMismatch, "grid functions differ in mesh or weight");
    for (std::size_t j = 0; j < values_.size(); ++j) values_[j] += rhs.values_[j];
    return *this;
}

WeightedGridFunction& WeightedGridFunction::operator-=(const WeightedGridFunction& rhs) {
    require(compatible(rhs), ErrorCode::MeshMismatch, "grid functions differ in mesh or weight");
    for (std::size_t j = 0; j < values_.size(); ++j) values_[j] -= rhs.values_[j];
    return *this;
}

WeightedGridFunction& WeightedGridFunction::operator*=(double c) {
    for (double& v : values_) v *= c;
    return *this;
}

WeightedGridFunction operator+(WeightedGridFunction lhs, const WeightedGridFunction& rhs) { return lhs += rhs; }
WeightedGridFunction operator-(WeightedGridFunction lhs, const WeightedGridFunction& rhs) { return lhs -= rhs; }
WeightedGridFunction operator*(double c, WeightedGridFunction f) { return f *= c; }

double weighted_sup_norm(const WeightedGridFunction& f) { return weighted_sup_norm(f, 0, f.size()); }

double weighted_sup_norm(const WeightedGridFunction& f, std::size_t first, std::size_t last) {
    double m = 0.0;
    const auto v = f.values();
    for (std::size_t j = first; j < std::min(last, v.size()); ++j) m = std::max(m, std::abs(v[j]));
    return m;
}

}  // namespace hilfer
