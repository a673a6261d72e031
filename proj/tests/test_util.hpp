#pragma once

#include "skewtor/form.hpp"

#include <random>

namespace testutil {

using skewtor::Form;
using skewtor::Rational;

inline Rational randomRational(std::mt19937& rng, int range = 5) {
    std::uniform_int_distribution<int> num(-range, range), den(1, 3);
    return Rational(num(rng)) / den(rng);
}

inline Form randomForm(std::mt19937& rng, int dim, int degree, double density = 0.5) {
    Form f(dim);
    std::bernoulli_distribution keep(density);
    for (skewtor::Blade b = 0; b < (1u << dim); ++b)
        if (__builtin_popcount(b) == degree && keep(rng)) f.add(b, randomRational(rng));
    return f;
}

inline skewtor::Vec randomVec(std::mt19937& rng, int dim) {
    skewtor::Vec v(dim);
    for (int i = 0; i < dim; ++i) v(i) = randomRational(rng);
    return v;
}

} // namespace testutil
