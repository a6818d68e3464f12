#pragma once

#include "gradlie/errors.hpp"
#include "gradlie/scalar.hpp"
#include "gradlie/linalg.hpp"
#include "gradlie/lie.hpp"
#include "gradlie/enumerate.hpp"
#include "gradlie/analysis.hpp"
#include "gradlie/derivations.hpp"
#include "gradlie/quotients.hpp"
#include "gradlie/assoc.hpp"
#include "gradlie/jordan.hpp"
#include "gradlie/jordan_quotients.hpp"
#include "gradlie/io.hpp"
#include "gradlie/gallery.hpp"
