// Convenience umbrella header.

#pragma once

#include "spinseq/beamsplitter.hpp"
#include "spinseq/enumeration.hpp"
#include "spinseq/exact.hpp"
#include "spinseq/model.hpp"
#include "spinseq/statespace.hpp"
#include "spinseq/sweep.hpp"
#include "spinseq/wigner.hpp"
