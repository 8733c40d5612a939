#pragma once

#include <stdexcept>
#include <string>

namespace emosig {

/// Base class for all errors raised by this library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// -- ingestion ---------------------------------------------------------------
class MalformedManifest : public Error { public: using Error::Error; };
class MissingChannel    : public Error { public: using Error::Error; };
class UnknownVideo      : public Error { public: using Error::Error; };
class MalformedTrace    : public Error { public: using Error::Error; };
class RateMismatch      : public Error { public: using Error::Error; };
class NonFinite         : public Error { public: using Error::Error; };
class OutOfRange        : public Error { public: using Error::Error; };

// -- signal processing -------------------------------------------------------
class BadBand           : public Error { public: using Error::Error; };
class TooShort          : public Error { public: using Error::Error; };
class WindowOutOfRange  : public Error { public: using Error::Error; };

// -- feature extraction ------------------------------------------------------
class EmptyWindow       : public Error { public: using Error::Error; };
class MissingSeries     : public Error { public: using Error::Error; };
class DuplicateInstance : public Error { public: using Error::Error; };
class EmptyMask         : public Error { public: using Error::Error; };

// -- classification / evaluation ---------------------------------------------
class SingleClass       : public Error { public: using Error::Error; };
class EmptyDataset      : public Error { public: using Error::Error; };
class DimensionMismatch : public Error { public: using Error::Error; };
class InstanceMismatch  : public Error { public: using Error::Error; };

} // namespace emosig
