#pragma once

#include <string>
#include <vector>

#include "txai/numeric.hpp"

namespace txai {

/// Per-forward record of intermediate state. Spatial layers store their
/// post-ReLU activations as channel stacks; pre-activations are kept so a
/// backward pass can recover the ReLU masks of that same forward.
struct ActivationTape {
    std::vector<std::string> layer_names;
    std::vector<std::vector<Grid2D>> activations;       // post-nonlinearity
    std::vector<std::vector<Grid2D>> pre_activations;   // pre-nonlinearity
    std::vector<double> pooled;
    std::vector<double> logits;
    ImageRGB input;

    const std::vector<Grid2D>& stack(const std::string& layer) const;
    int layer_index(const std::string& layer) const;  // -1 when absent
};

struct ForwardResult {
    std::vector<double> logits;
    ProbVector probs;
    ActivationTape tape;
};

/// Positional bias-gradient record for one biased layer: maps[k](y,x) is the
/// class-score gradient w.r.t. the bias of channel k at application site
/// (y,x); bias[k] is the bias value itself. Dense layers contribute 1x1 maps.
struct BiasContribution {
    std::string layer;
    std::vector<Grid2D> maps;
    std::vector<double> bias;
};

/// Frozen, deterministic model seen by the attribution methods: forward
/// scores, named-layer activations, and gradients of a class score with
/// respect to activations, the input, and biases. The class score is the
/// pre-softmax logit throughout. Implementations must be pure per call so a
/// single instance can serve concurrent explanations.
class ModelBackend {
public:
    virtual ~ModelBackend() = default;

    virtual const std::vector<std::string>& layer_names() const = 0;
    virtual int num_classes() const = 0;
    virtual std::string model_id() const = 0;
    /// cnn / vit-proxy / yolo-proxy metadata tag.
    virtual std::string model_kind() const = 0;

    virtual ForwardResult forward(const ImageRGB& image) const = 0;

    /// Forward without tape capture; default delegates to forward().
    virtual ProbVector predict(const ImageRGB& image) const { return forward(image).probs; }

    /// d(logit_c)/d(activations of `layer`), for the forward recorded in tape.
    virtual std::vector<Grid2D> grad_wrt_activations(const ActivationTape& tape, int class_index,
                                                     const std::string& layer) const = 0;

    /// d(logit_c)/d(input), one plane per channel.
    virtual std::vector<Grid2D> grad_wrt_input(const ImageRGB& image, int class_index) const = 0;

    /// Parameter gradients d(logit_c)/d(bias), one vector per biased layer.
    virtual std::vector<std::pair<std::string, std::vector<double>>> grad_wrt_biases(
        const ImageRGB& image, int class_index) const = 0;

    virtual bool supports_bias_gradients() const { return false; }

    /// Positional bias gradients; throws "fullgrad unsupported" by default.
    virtual std::vector<BiasContribution> bias_gradient_maps(const ImageRGB& image,
                                                             int class_index) const;
};

}  // namespace txai
