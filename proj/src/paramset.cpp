#include "homnambu/paramset.hpp"

#include "homnambu/errors.hpp"

namespace homnambu {

ParamSet::ParamSet(std::vector<std::string> names) : names_(std::move(names)) {
    for (std::size_t i = 0; i < names_.size(); ++i) {
        auto [it, fresh] = index_.emplace(names_[i], i);
        if (!fresh) throw DocumentError("duplicate parameter name '" + names_[i] + "'");
    }
}

ParamSetPtr ParamSet::make(std::vector<std::string> names) {
    return ParamSetPtr(new ParamSet(std::move(names)));
}

const ParamSetPtr& ParamSet::empty() {
    static const ParamSetPtr instance = make({});
    return instance;
}

std::optional<std::size_t> ParamSet::index_of(std::string_view name) const {
    auto it = index_.find(name);
    if (it == index_.end()) return std::nullopt;
    return it->second;
}

}  // namespace homnambu
