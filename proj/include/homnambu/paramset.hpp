#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace homnambu {

class ParamSet;
using ParamSetPtr = std::shared_ptr<const ParamSet>;

/* Immutable ordered list of parameter names.  Every polynomial built in
 * one computation shares a single ParamSet, which fixes the variable
 * ordering used by the term order and by serialization. */
class ParamSet {
  public:
    static ParamSetPtr make(std::vector<std::string> names);
    static const ParamSetPtr& empty();

    std::size_t size() const { return names_.size(); }
    const std::vector<std::string>& names() const { return names_; }
    const std::string& name(std::size_t i) const { return names_[i]; }
    std::optional<std::size_t> index_of(std::string_view name) const;
    bool contains(std::string_view name) const { return index_of(name).has_value(); }

    friend bool same_params(const ParamSetPtr& a, const ParamSetPtr& b) {
        return a == b || (a && b && a->names_ == b->names_);
    }

  private:
    explicit ParamSet(std::vector<std::string> names);

    std::vector<std::string> names_;
    std::map<std::string, std::size_t, std::less<>> index_;
};

}  // namespace homnambu
