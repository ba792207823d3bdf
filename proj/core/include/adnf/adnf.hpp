#ifndef ADNF_ADNF_HPP
#define ADNF_ADNF_HPP

// Umbrella header for the ADNF streaming fuzzy clustering library.

#include "adnf/adapt.hpp"
#include "adnf/errors.hpp"
#include "adnf/fcm.hpp"
#include "adnf/geometry.hpp"
#include "adnf/io.hpp"
#include "adnf/metrics.hpp"
#include "adnf/pca.hpp"
#include "adnf/random.hpp"
#include "adnf/stream.hpp"
#include "adnf/topology.hpp"
#include "adnf/types.hpp"

#endif  // ADNF_ADNF_HPP
