#pragma once

#include "pisot/decision.hpp"
#include "pisot/exact.hpp"
#include "pisot/families.hpp"
#include "pisot/recurrence.hpp"
#include "pisot/roots.hpp"
#include "pisot/scan.hpp"
#include "pisot/sequence.hpp"
#include "pisot/serialize.hpp"
