import os

from hypothesis import settings

# algebraic-law tests fail generically when they fail at all, so a
# modest example budget keeps the suite quick without losing power
settings.register_profile("fast", max_examples=25, deadline=None)
settings.register_profile("thorough", max_examples=300, deadline=None)
settings.load_profile(os.environ.get("HYPOTHESIS_PROFILE", "fast"))
