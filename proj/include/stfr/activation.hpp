#pragma once

#include <cmath>
#include <string>

#include "stfr/common.hpp"

namespace stfr {

enum class ActivationKind { Tanh, Sigmoid, Relu, Identity };

inline std::string to_string(ActivationKind k) {
    switch (k) {
        case ActivationKind::Tanh: return "tanh";
        case ActivationKind::Sigmoid: return "sigmoid";
        case ActivationKind::Relu: return "relu";
        case ActivationKind::Identity: return "identity";
    }
    return "?";
}

inline ActivationKind activation_from_string(const std::string& s) {
    if (s == "tanh") return ActivationKind::Tanh;
    if (s == "sigmoid") return ActivationKind::Sigmoid;
    if (s == "relu") return ActivationKind::Relu;
    if (s == "identity") return ActivationKind::Identity;
    throw validation_error("unknown activation: " + s);
}

inline double activate(ActivationKind k, double z) {
    switch (k) {
        case ActivationKind::Tanh: return std::tanh(z);
        case ActivationKind::Sigmoid: return 1.0 / (1.0 + std::exp(-z));
        case ActivationKind::Relu: return z > 0.0 ? z : 0.0;
        case ActivationKind::Identity: return z;
    }
    return z;
}

/// Derivative expressed through the activation value a = U(z); every
/// supported kind admits this form, which is what backpropagation caches.
inline double activate_deriv_from_value(ActivationKind k, double a) {
    switch (k) {
        case ActivationKind::Tanh: return 1.0 - a * a;
        case ActivationKind::Sigmoid: return a * (1.0 - a);
        case ActivationKind::Relu: return a > 0.0 ? 1.0 : 0.0;
        case ActivationKind::Identity: return 1.0;
    }
    return 1.0;
}

} // namespace stfr
