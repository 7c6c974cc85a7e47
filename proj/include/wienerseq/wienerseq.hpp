#pragma once

#include "wienerseq/canonical.hpp"
#include "wienerseq/constructions.hpp"
#include "wienerseq/distance_sequence.hpp"
#include "wienerseq/enumeration.hpp"
#include "wienerseq/errors.hpp"
#include "wienerseq/graph.hpp"
#include "wienerseq/indices.hpp"
#include "wienerseq/sampling.hpp"
#include "wienerseq/verifier.hpp"
#include "wienerseq/version.hpp"
