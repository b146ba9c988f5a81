#pragma once

#include <functional>
#include <string>

#include "sftirr/error.hpp"

namespace helpers {

inline bool throws_named(const std::string& name,
                         const std::function<void()>& fn) {
    try {
        fn();
    } catch (const sftirr::Error& e) {
        return e.name() == name;
    }
    return false;
}

}  // namespace helpers
