from dynaconf import Dynaconf

from matherlift.app import settings as defaults

# Environment variables such as MATHERLIFT_SEED override the module defaults.
settings = Dynaconf(
    envvar_prefix="MATHERLIFT",
    **{name: getattr(defaults, name) for name in dir(defaults) if name.isupper()},
)
