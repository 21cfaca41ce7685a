#pragma once

#include "wfai/active_info.hpp"
#include "wfai/binomial.hpp"
#include "wfai/coalescent.hpp"
#include "wfai/diffusion.hpp"
#include "wfai/error.hpp"
#include "wfai/fixation.hpp"
#include "wfai/info.hpp"
#include "wfai/random.hpp"
#include "wfai/wf_chain.hpp"
