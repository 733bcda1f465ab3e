#include "txai/numeric.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>

namespace txai {

Grid2D::Grid2D(int h, int w, double fill)
    : height(h), width(w), values(static_cast<size_t>(std::max(h, 0)) * std::max(w, 0), fill) {
    if (h <= 0 || w <= 0) throw std::invalid_argument("grid dims must be positive");
}

Grid2D::Grid2D(int h, int w, std::vector<double> v) : height(h), width(w), values(std::move(v)) {
    validate();
}

double Grid2D::min_value() const {
    return *std::min_element(values.begin(), values.end());
}

double Grid2D::max_value() const {
    return *std::max_element(values.begin(), values.end());
}

double Grid2D::sum() const {
    return std::accumulate(values.begin(), values.end(), 0.0);
}

void Grid2D::validate(const char* what) const {
    if (height <= 0 || width <= 0)
        throw std::invalid_argument(std::string(what) + ": dims must be positive");
    if (values.size() != static_cast<size_t>(height) * width)
        throw std::invalid_argument(std::string(what) + ": storage does not match dims");
    for (double v : values)
        if (!std::isfinite(v)) throw std::invalid_argument(std::string(what) + ": non-finite value");
}

ImageRGB::ImageRGB(int h, int w, float fr, float fg, float fb) : height(h), width(w) {
    if (h <= 0 || w <= 0) throw std::invalid_argument("image dims must be positive");
    const size_t n = static_cast<size_t>(h) * w;
    r.assign(n, fr);
    g.assign(n, fg);
    b.assign(n, fb);
}

std::vector<float>& ImageRGB::channel(int c) {
    switch (c) {
        case 0: return r;
        case 1: return g;
        default: return b;
    }
}

const std::vector<float>& ImageRGB::channel(int c) const {
    switch (c) {
        case 0: return r;
        case 1: return g;
        default: return b;
    }
}

Grid2D ImageRGB::plane(int c) const {
    const auto& src = channel(c);
    Grid2D out(height, width);
    for (size_t i = 0; i < src.size(); ++i) out.values[i] = static_cast<double>(src[i]);
    return out;
}

Grid2D ImageRGB::luminance() const {
    Grid2D out(height, width);
    for (size_t i = 0; i < out.values.size(); ++i)
        out.values[i] = (static_cast<double>(r[i]) + g[i] + b[i]) / 3.0;
    return out;
}

ImageRGB ImageRGB::from_planes(const Grid2D& pr, const Grid2D& pg, const Grid2D& pb, bool clamp) {
    pr.validate("R plane");
    pg.validate("G plane");
    pb.validate("B plane");
    if (!pr.same_dims(pg) || !pr.same_dims(pb))
        throw std::invalid_argument("image planes must share dims");
    ImageRGB img(pr.height, pr.width);
    const Grid2D* planes[3] = {&pr, &pg, &pb};
    for (int c = 0; c < 3; ++c) {
        auto& dst = img.channel(c);
        for (size_t i = 0; i < dst.size(); ++i) {
            double v = planes[c]->values[i];
            if (clamp) {
                v = std::clamp(v, 0.0, 1.0);
            } else if (v < -1e-9 || v > 1.0 + 1e-9) {
                throw std::invalid_argument("image value outside [0,1]");
            }
            dst[i] = static_cast<float>(std::clamp(v, 0.0, 1.0));
        }
    }
    return img;
}

void ImageRGB::validate(const char* what) const {
    if (height <= 0 || width <= 0)
        throw std::invalid_argument(std::string(what) + ": dims must be positive");
    const size_t n = pixels();
    if (r.size() != n || g.size() != n || b.size() != n)
        throw std::invalid_argument(std::string(what) + ": plane storage mismatch");
    for (int c = 0; c < 3; ++c)
        for (float v : channel(c))
            if (!(v >= 0.f && v <= 1.f))
                throw std::invalid_argument(std::string(what) + ": value outside [0,1]");
}

int ProbVector::argmax() const {
    return static_cast<int>(std::max_element(p.begin(), p.end()) - p.begin());
}

ProbVector ProbVector::checked(std::vector<double> values) {
    if (values.empty()) throw std::invalid_argument("probability vector must be non-empty");
    double sum = 0.0;
    for (double v : values) {
        if (!std::isfinite(v) || v < -1e-12 || v > 1.0 + 1e-9)
            throw std::invalid_argument("probability entry outside [0,1]");
        sum += v;
    }
    if (std::abs(sum - 1.0) > 1e-6)
        throw std::invalid_argument("probabilities must sum to 1");
    return ProbVector{std::move(values)};
}

double BinarizeRule::threshold_for(const Grid2D& g) const {
    if (absolute) return factor;
    return factor * g.max_value();
}

ProbVector softmax(const std::vector<double>& logits) {
    if (logits.empty()) throw std::invalid_argument("empty logits");
    for (double v : logits)
        if (!std::isfinite(v)) throw std::invalid_argument("non-finite logit");
    const double m = *std::max_element(logits.begin(), logits.end());
    std::vector<double> e(logits.size());
    double sum = 0.0;
    for (size_t i = 0; i < logits.size(); ++i) {
        e[i] = std::exp(logits[i] - m);
        sum += e[i];
    }
    for (double& v : e) v /= sum;
    return ProbVector{std::move(e)};
}

double shannon_entropy(const ProbVector& p) {
    double h = 0.0;
    for (double v : p.p)
        if (v > 0.0) h -= v * std::log(v);
    return h;
}

Grid2D normalize01(const Grid2D& g) {
    g.validate();
    const double lo = g.min_value();
    const double hi = g.max_value();
    Grid2D out(g.height, g.width);
    if (hi > lo) {
        const double span = hi - lo;
        for (size_t i = 0; i < g.values.size(); ++i) out.values[i] = (g.values[i] - lo) / span;
    }
    return out;
}

Grid2D bilinear_resize(const Grid2D& g, int out_h, int out_w) {
    g.validate();
    if (out_h < 1 || out_w < 1) throw std::invalid_argument("resize dims must be >= 1");
    Grid2D out(out_h, out_w);
    // Corner-aligned sampling: out corner pixels hit input corner pixels.
    const double sy = out_h == 1 ? 0.0 : static_cast<double>(g.height - 1) / (out_h - 1);
    const double sx = out_w == 1 ? 0.0 : static_cast<double>(g.width - 1) / (out_w - 1);
    for (int y = 0; y < out_h; ++y) {
        const double fy = y * sy;
        int y0 = static_cast<int>(fy);
        if (y0 >= g.height - 1) y0 = g.height - 1;
        const int y1 = std::min(y0 + 1, g.height - 1);
        const double wy = fy - y0;
        for (int x = 0; x < out_w; ++x) {
            const double fx = x * sx;
            int x0 = static_cast<int>(fx);
            if (x0 >= g.width - 1) x0 = g.width - 1;
            const int x1 = std::min(x0 + 1, g.width - 1);
            const double wx = fx - x0;
            const double top = g.at(y0, x0) * (1.0 - wx) + g.at(y0, x1) * wx;
            const double bot = g.at(y1, x0) * (1.0 - wx) + g.at(y1, x1) * wx;
            out.at(y, x) = top * (1.0 - wy) + bot * wy;
        }
    }
    return out;
}

double cosine_flat(const Grid2D& a, const Grid2D& b) {
    if (!a.same_dims(b)) throw std::invalid_argument("cosine_flat: dim mismatch");
    double dot = 0.0, na = 0.0, nb = 0.0;
    for (size_t i = 0; i < a.values.size(); ++i) {
        dot += a.values[i] * b.values[i];
        na += a.values[i] * a.values[i];
        nb += b.values[i] * b.values[i];
    }
    if (na == 0.0 || nb == 0.0) throw std::invalid_argument("zero-norm map");
    return dot / (std::sqrt(na) * std::sqrt(nb));
}

Grid2D binarize(const Grid2D& g, const BinarizeRule& rule) {
    g.validate();
    Grid2D out(g.height, g.width);
    if (!rule.absolute && g.max_value() <= 0.0) return out;  // nothing salient
    const double thr = rule.threshold_for(g);
    for (size_t i = 0; i < g.values.size(); ++i)
        out.values[i] = g.values[i] >= thr ? 1.0 : 0.0;
    return out;
}

double iou_binary(const Grid2D& a, const Grid2D& b) {
    if (!a.same_dims(b)) throw std::invalid_argument("iou_binary: dim mismatch");
    std::size_t inter = 0, uni = 0;
    for (size_t i = 0; i < a.values.size(); ++i) {
        const bool sa = a.values[i] != 0.0;
        const bool sb = b.values[i] != 0.0;
        inter += sa && sb;
        uni += sa || sb;
    }
    if (uni == 0) return 1.0;  // agreement on "nothing salient"
    return static_cast<double>(inter) / static_cast<double>(uni);
}

}  // namespace txai
