#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

#include "isolab/graph.hpp"

namespace isolab {

/// Largest order representable by the short (one length byte) graph6 form.
inline constexpr int kGraph6MaxOrder = 62;

class Graph6Error : public std::runtime_error {
public:
    enum class Kind {
        EmptyLine,
        BadLength,       // length byte out of range or long form requested
        WrongByteCount,  // body shorter or longer than n(n-1)/2 bits need
        CharOutOfRange,  // body byte outside 63..126
        NonzeroPadding,  // unused trailing bits set
    };

    Graph6Error(Kind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
    Kind kind() const { return kind_; }

private:
    Kind kind_;
};

Graph parse_graph6(std::string_view text);
std::string emit_graph6(const Graph& g);

}  // namespace isolab
