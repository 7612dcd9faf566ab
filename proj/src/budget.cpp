#include "chelly/budget.hpp"

#include <cstdlib>
#include <sstream>

#include "chelly/errors.hpp"

namespace chelly {

SearchBudget SearchBudget::parse(const std::string& text, SearchBudget base)
{
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty())
            continue;
        auto eq = item.find('=');
        if (eq == std::string::npos)
            throw InputError("budget entry '" + item + "' is not key=value");
        const std::string key = item.substr(0, eq);
        std::size_t value = 0;
        try {
            std::size_t used = 0;
            value = std::stoul(item.substr(eq + 1), &used);
            if (used != item.size() - eq - 1)
                throw std::invalid_argument("trailing characters");
        } catch (const std::exception&) {
            throw InputError("budget value in '" + item + "' is not a non-negative integer");
        }
        if (key == "tau_vertices")
            base.max_tau_vertices = value;
        else if (key == "tau_edges")
            base.max_tau_edges = value;
        else if (key == "family")
            base.max_family_size = value;
        else if (key == "rainbow")
            base.max_rainbow_tuples = value;
        else if (key == "line_candidates")
            base.max_line_candidates = value;
        else
            throw InputError("unknown budget key '" + key + "'");
    }
    return base;
}

SearchBudget SearchBudget::from_environment()
{
    const char* env = std::getenv("CHELLY_BUDGET");
    return env ? parse(env) : SearchBudget{};
}

} // namespace chelly
