#pragma once

#include <cmath>
#include <vector>

#include <Eigen/Core>

namespace argen {

// Adam over a list of parameter matrices. beta1 = 0.9, beta2 = 0.999,
// eps = 1e-8; bias-corrected.
class Adam {
public:
    Adam() = default;

    void step(std::vector<Eigen::MatrixXd*> params,
              const std::vector<Eigen::MatrixXd>& grads, double lr) {
        if (m_.empty()) {
            for (auto* p : params) {
                m_.push_back(Eigen::MatrixXd::Zero(p->rows(), p->cols()));
                v_.push_back(Eigen::MatrixXd::Zero(p->rows(), p->cols()));
            }
        }
        ++t_;
        double bc1 = 1.0 - std::pow(beta1_, t_);
        double bc2 = 1.0 - std::pow(beta2_, t_);
        for (std::size_t i = 0; i < params.size(); ++i) {
            m_[i] = beta1_ * m_[i] + (1.0 - beta1_) * grads[i];
            v_[i] = beta2_ * v_[i] + (1.0 - beta2_) * grads[i].cwiseProduct(grads[i]);
            Eigen::MatrixXd mhat = m_[i] / bc1;
            Eigen::MatrixXd vhat = v_[i] / bc2;
            *params[i] -= lr * (mhat.array() / (vhat.array().sqrt() + eps_)).matrix();
        }
    }

private:
    double beta1_ = 0.9, beta2_ = 0.999, eps_ = 1e-8;
    long t_ = 0;
    std::vector<Eigen::MatrixXd> m_, v_;
};

}  // namespace argen
