#ifndef MTPV_PARAMS_HPP
#define MTPV_PARAMS_HPP

#include <memory>
#include <string>
#include <vector>

#include "mtpv/matrix.hpp"

namespace mtpv {

enum class ParamGroup { Shared, TaskClassification, TaskAdr, TaskIndication };

const char* to_string(ParamGroup g);
ParamGroup param_group_from_string(const std::string& s);

// One learnable tensor. Values stay float32-representable (see note on quantize)
// so the serialized float payload round-trips bit-exactly.
struct ParamTensor {
    std::string name;
    ParamGroup group;
    Matrix value;
    Matrix grad;

    ParamTensor(std::string n, ParamGroup g, Matrix v)
        : name(std::move(n)), group(g), value(std::move(v)), grad(value.rows, value.cols) {}

    void zero_grad() { std::fill(grad.data.begin(), grad.data.end(), 0.0); }
    std::size_t size() const { return value.size(); }
};

// Round every entry to the nearest float, stored back as double. Checkpoints carry
// float payloads, so parameters are kept on the float grid at init and after updates.
void quantize_to_float(Matrix& m);

// Owns all tensors of a model in a fixed creation order (the checkpoint manifest order).
class ParamRegistry {
public:
    ParamTensor& create(const std::string& name, ParamGroup group, Matrix init) {
        tensors_.push_back(std::make_unique<ParamTensor>(name, group, std::move(init)));
        quantize_to_float(tensors_.back()->value);
        return *tensors_.back();
    }

    ParamTensor* find(const std::string& name) {
        for (auto& t : tensors_)
            if (t->name == name) return t.get();
        return nullptr;
    }

    std::vector<ParamTensor*> all() {
        std::vector<ParamTensor*> out;
        out.reserve(tensors_.size());
        for (auto& t : tensors_) out.push_back(t.get());
        return out;
    }

    std::vector<ParamTensor*> in_groups(std::initializer_list<ParamGroup> groups) {
        std::vector<ParamTensor*> out;
        for (auto& t : tensors_)
            for (ParamGroup g : groups)
                if (t->group == g) {
                    out.push_back(t.get());
                    break;
                }
        return out;
    }

    void zero_all_grads() {
        for (auto& t : tensors_) t->zero_grad();
    }

    std::size_t scalar_count() const {
        std::size_t n = 0;
        for (auto& t : tensors_) n += t->size();
        return n;
    }

private:
    std::vector<std::unique_ptr<ParamTensor>> tensors_;
};

} // namespace mtpv

#endif
