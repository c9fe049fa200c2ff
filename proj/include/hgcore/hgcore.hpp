#ifndef HGCORE_HGCORE_HPP
#define HGCORE_HGCORE_HPP

#include "hgcore/densest.hpp"
#include "hgcore/diffusion.hpp"
#include "hgcore/error.hpp"
#include "hgcore/gen.hpp"
#include "hgcore/io.hpp"
#include "hgcore/kdcore.hpp"
#include "hgcore/localcore.hpp"
#include "hgcore/maxflow.hpp"
#include "hgcore/model.hpp"
#include "hgcore/peel.hpp"
#include "hgcore/rational.hpp"

#endif // HGCORE_HGCORE_HPP
