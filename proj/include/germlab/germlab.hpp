#ifndef GERMLAB_GERMLAB_HPP
#define GERMLAB_GERMLAB_HPP

#include "germlab/algebraic.hpp"
#include "germlab/classify.hpp"
#include "germlab/error.hpp"
#include "germlab/germ.hpp"
#include "germlab/label.hpp"
#include "germlab/linalg.hpp"
#include "germlab/lowdim.hpp"
#include "germlab/morin.hpp"
#include "germlab/parse.hpp"
#include "germlab/perturb.hpp"
#include "germlab/poly.hpp"
#include "germlab/rational.hpp"
#include "germlab/sigma20.hpp"
#include "germlab/univariate.hpp"

#endif  // GERMLAB_GERMLAB_HPP
