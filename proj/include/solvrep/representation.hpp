#pragma once

#include <memory>
#include <vector>

#include "solvrep/grpalg.hpp"
#include "solvrep/matrix.hpp"
#include "solvrep/presentation.hpp"

namespace solvrep {

/// Matrix representation of G_level (the subgroup generated by the first
/// `level` generators); level = n gives the full group.  Images are exact
/// matrices over Q(zeta_m).
class Representation {
public:
    Representation() = default;
    Representation(std::shared_ptr<const Group> group, std::size_t level,
                   std::vector<Mat> images, std::uint64_t conductor)
        : group_(std::move(group)), level_(level), images_(std::move(images)), m_(conductor) {}

    const std::shared_ptr<const Group>& group() const { return group_; }
    std::size_t level() const { return level_; }
    std::uint64_t conductor() const { return m_; }
    std::size_t degree() const { return images_.empty() ? 1 : images_[0].rows(); }
    const Mat& image_of_generator(std::size_t i) const { return images_[i]; }

    /// Image of an arbitrary element of G_level via its normal form.
    Mat image(std::size_t element) const;
    /// Linear extension to the group algebra (support must lie in G_level).
    Mat apply(const AlgebraElement& a) const;
    CycNumber character(std::size_t element) const { return image(element).trace(); }

    /// Every defining relation of G_level holds as an exact matrix identity.
    bool relations_hold() const;

private:
    std::shared_ptr<const Group> group_;
    std::size_t level_ = 0;
    std::vector<Mat> images_; // one per generator of the level
    std::uint64_t m_ = 1;
};

} // namespace solvrep
