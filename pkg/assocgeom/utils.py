import arg

from assocgeom import modspace


class space(arg.Lazy):
    """
    Lazily coerces a value into a `ModuleSpace`. Can be used inside
    of ``python-args`` decorators.

    Can coerce the following types:

    1. ``ModuleSpace``: Returns the space.
    2. ``str``: A literal such as ``GF(3)^2`` or the path of a JSON
       space file.
    3. ``dict``: A space description (see `modspace.space_from_dict`).

    Args:
        value (str): The argument name to be evaluated.
    """

    def __init__(self, value):
        super().__init__()
        assert isinstance(value, str)
        self._value = arg.val(value)

    def _call(self, **call_args):
        return modspace.coerce_space(arg.load(self._value, **call_args))


class sub(arg.Lazy):
    """
    Lazily coerces a value into a `Subspace` of the space held by another
    argument. Can be used inside of ``python-args`` decorators.

    Can coerce the following types:

    1. ``Subspace``: Returns the subspace.
    2. ``None``: Returns ``None``.
    3. ``str``: A subspace literal such as ``[1,2]`` or ``GF(3)^2 : [1,2]``.
    4. ``List[List]``: Spanning rows.

    Args:
        value (str): The argument name to be evaluated.
        within (str, default='space'): The argument holding the ambient
            space. It is coerced with `space`.

    Examples:
        Coercing the arguments of a function::

            import arg
            from assocgeom import utils

            @arg.defaults(
                space=utils.space('space'),
                x=utils.sub('x'),
                a=utils.sub('a'),
            )
            def complement_dim(space, x, a):
                return space.dim - x.dim

            complement_dim(space='GF(3)^2', x='[1,1]', a='[0,1]')
    """

    def __init__(self, value, *, within='space'):
        super().__init__()
        assert isinstance(value, str)
        self._value = arg.val(value)
        self._within = space(within)

    def _call(self, **call_args):
        value = arg.load(self._value, **call_args)
        if value is None or isinstance(value, modspace.Subspace):
            return value

        ambient = arg.load(self._within, **call_args)
        if isinstance(value, str):
            return modspace.parse_subspace(value, ambient)
        return modspace.subspace(ambient, value)
