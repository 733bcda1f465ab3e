#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace txai {

/// Dense row-major 2-D map of doubles. Carrier for saliency maps, gray
/// images, binary masks, and single activation channels.
struct Grid2D {
    int height = 0;
    int width = 0;
    std::vector<double> values;

    Grid2D() = default;
    Grid2D(int h, int w, double fill = 0.0);
    Grid2D(int h, int w, std::vector<double> v);

    double& at(int r, int c) { return values[static_cast<size_t>(r) * width + c]; }
    double at(int r, int c) const { return values[static_cast<size_t>(r) * width + c]; }
    std::size_t size() const { return values.size(); }
    bool same_dims(const Grid2D& o) const { return height == o.height && width == o.width; }

    double min_value() const;
    double max_value() const;
    double sum() const;

    /// Throws std::invalid_argument on non-finite entries or a
    /// height*width/storage mismatch.
    void validate(const char* what = "grid") const;
};

/// Three-channel image, values in [0,1]. Planes are stored as float32;
/// arithmetic elsewhere widens to double.
struct ImageRGB {
    int height = 0;
    int width = 0;
    std::vector<float> r, g, b;

    ImageRGB() = default;
    ImageRGB(int h, int w, float fr = 0.f, float fg = 0.f, float fb = 0.f);

    std::size_t pixels() const { return static_cast<size_t>(height) * width; }
    std::size_t idx(int y, int x) const { return static_cast<size_t>(y) * width + x; }

    std::vector<float>& channel(int c);
    const std::vector<float>& channel(int c) const;

    /// Widen one channel (0=R,1=G,2=B) to a double grid.
    Grid2D plane(int c) const;
    /// Mean of the three planes.
    Grid2D luminance() const;

    /// Builds from three same-sized planes. When clamp is false, values
    /// outside [0,1] (beyond 1e-9 slack) throw; when true they are clamped.
    static ImageRGB from_planes(const Grid2D& pr, const Grid2D& pg, const Grid2D& pb,
                                bool clamp = false);

    void validate(const char* what = "image") const;
};

/// Discrete distribution: entries in [0,1] summing to 1 within 1e-6.
struct ProbVector {
    std::vector<double> p;

    std::size_t size() const { return p.size(); }
    double operator[](std::size_t i) const { return p[i]; }
    int argmax() const;

    /// Checked constructor; throws std::invalid_argument when the invariants
    /// do not hold.
    static ProbVector checked(std::vector<double> values);
};

/// Threshold rule used to turn a continuous map into a binary mask.
/// Default: pixel set iff value >= factor * max(map); a map whose max is
/// <= 0 binarizes to the empty mask. With absolute=true the factor is the
/// threshold itself.
struct BinarizeRule {
    double factor = 0.5;
    bool absolute = false;

    double threshold_for(const Grid2D& g) const;
};

// ---------------------------------------------------------------------------
// Operations. All pure; inputs are never mutated.
// ---------------------------------------------------------------------------

/// Max-subtracted stable softmax. Errors: "empty logits", "non-finite logit".
ProbVector softmax(const std::vector<double>& logits);

/// -sum p ln p in nats, with 0 ln 0 := 0.
double shannon_entropy(const ProbVector& p);

/// Min-max rescale to [0,1]; a constant grid maps to all zeros.
Grid2D normalize01(const Grid2D& g);

/// Corner-aligned bilinear interpolation. Identity when dims are unchanged.
Grid2D bilinear_resize(const Grid2D& g, int out_h, int out_w);

/// Cosine similarity of the flattened grids. Throws "zero-norm map" when
/// either argument has zero norm, and on dimension mismatch.
double cosine_flat(const Grid2D& a, const Grid2D& b);

/// Binary mask per the rule; entries are exactly 0.0 or 1.0.
Grid2D binarize(const Grid2D& g, const BinarizeRule& rule = {});

/// |a AND b| / |a OR b| over nonzero cells; two empty masks give 1.0.
double iou_binary(const Grid2D& a, const Grid2D& b);

}  // namespace txai
