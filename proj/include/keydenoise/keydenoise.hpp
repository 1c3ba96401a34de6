// Umbrella header.
#pragma once

#include "keydenoise/candidates.hpp"
#include "keydenoise/corpus.hpp"
#include "keydenoise/denoiser.hpp"
#include "keydenoise/error.hpp"
#include "keydenoise/eval.hpp"
#include "keydenoise/features.hpp"
#include "keydenoise/model.hpp"
#include "keydenoise/porter.hpp"
#include "keydenoise/textkit.hpp"
#include "keydenoise/vocab.hpp"
