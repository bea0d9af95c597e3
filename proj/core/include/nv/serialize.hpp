#pragma once

#include <string>
#include <string_view>

#include "nv/element.hpp"

namespace nv {

/// {"n": arity, "cells": [{"dom": "...", "cod": "..."}, ...]} with the
/// address syntax of Address::str(); cells appear in canonical order, so
/// the round trip is exact.
std::string element_to_json(const Element& e);

/// Parses the record above, validating both partitions.
Element element_from_json(std::string_view text);

} // namespace nv
