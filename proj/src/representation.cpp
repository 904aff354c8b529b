#include "solvrep/representation.hpp"

namespace solvrep {

Mat Representation::image(std::size_t element) const {
    GroupElement e = group_->element(element);
    Mat acc = Mat::identity(degree());
    for (std::size_t i = 0; i < level_; ++i)
        if (e.exps[i] != 0) acc = acc * images_[i].pow(e.exps[i]);
    for (std::size_t i = level_; i < e.exps.size(); ++i)
        if (e.exps[i] != 0)
            throw std::invalid_argument("element lies outside the representation's level");
    return acc;
}

Mat Representation::apply(const AlgebraElement& a) const {
    Mat acc(degree(), degree());
    for (const auto& [g, c] : a.terms()) acc = acc + image(g).scale(c);
    return acc;
}

bool Representation::relations_hold() const {
    const auto& lp = group_->presentation();
    for (std::size_t i = 0; i < level_; ++i) {
        Mat lhs = images_[i].pow(static_cast<long>(lp.generators[i].prime));
        Mat rhs = image(group_->normalize(lp.power_words[i]));
        if (lhs != rhs) return false;
        for (std::size_t j = 0; j < i; ++j) {
            Mat conj = images_[i].inverse() * images_[j] * images_[i];
            if (conj != image(group_->normalize(lp.conj_words[i][j]))) return false;
        }
    }
    return true;
}

} // namespace solvrep
