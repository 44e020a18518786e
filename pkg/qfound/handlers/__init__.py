from . import spectrum, trajectory, action, audit
