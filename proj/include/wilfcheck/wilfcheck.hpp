#pragma once

#include "wilfcheck/bijection.hpp"
#include "wilfcheck/classes.hpp"
#include "wilfcheck/enumerate.hpp"
#include "wilfcheck/lrmax.hpp"
#include "wilfcheck/pattern.hpp"
#include "wilfcheck/permutation.hpp"
#include "wilfcheck/verify.hpp"
