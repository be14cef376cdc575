#pragma once

#include <optional>

#include "partitions/error.hpp"

// Kind of the partitions::Error thrown by f, or nullopt if it returns.
template <class F>
std::optional<partitions::ErrorKind> thrown_kind(F&& f)
{
    try {
        f();
    } catch (const partitions::Error& e) {
        return e.kind();
    }
    return std::nullopt;
}
