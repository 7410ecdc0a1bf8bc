// Generated by data/gen_wordlists.py; do not edit by hand.
namespace cti::detail {

const char* kBuiltinStopwords =
R"stop(# English stopword list used by the preprocessing pipeline.
a
about
above
across
after
afterwards
again
against
all
almost
alone
along
already
also
although
always
am
among
amongst
amoungst
amount
an
and
another
any
anyhow
anyone
anything
anyway
anywhere
are
around
as
at
back
be
became
because
become
becomes
becoming
been
before
beforehand
behind
being
below
beside
besides
between
beyond
bill
both
bottom
but
by
call
can
cannot
cant
co
con
could
couldnt
cry
de
describe
detail
do
done
down
due
during
each
eg
eight
either
eleven
else
elsewhere
empty
enough
etc
even
ever
every
everyone
everything
everywhere
except
few
fifteen
fifty
fify
fill
find
fire
first
five
for
former
formerly
forty
found
four
from
front
full
further
get
give
go
had
has
hasnt
have
he
hence
her
here
hereafter
hereby
herein
hereupon
hers
herself
him
himself
his
how
however
hundred
ie
if
in
inc
indeed
interest
into
is
it
its
itself
keep
last
latter
latterly
least
less
ltd
made
many
may
me
meanwhile
might
mill
mine
more
moreover
most
mostly
move
much
must
my
myself
name
namely
neither
never
nevertheless
next
nine
no
nobody
none
noone
nor
not
nothing
now
nowhere
of
off
often
on
once
one
only
onto
or
other
others
otherwise
our
ours
ourselves
out
over
own
part
per
perhaps
please
put
rather
re
same
see
seem
seemed
seeming
seems
serious
several
she
should
show
side
since
sincere
six
sixty
so
some
somehow
someone
something
sometime
sometimes
somewhere
still
such
system
take
ten
than
that
the
their
them
themselves
then
thence
there
thereafter
thereby
therefore
therein
thereupon
these
they
thick
thin
third
this
those
though
three
through
throughout
thru
thus
to
together
too
top
toward
towards
twelve
twenty
two
un
under
until
up
upon
us
very
via
was
we
well
were
what
whatever
when
whence
whenever
where
whereafter
whereas
whereby
wherein
whereupon
wherever
whether
which
while
whither
who
whoever
whole
whom
whose
why
will
with
within
without
would
yet
you
your
yours
yourself
yourselves
)stop";

const char* kBuiltinLemmaExceptions =
R"lem(# irregular form<TAB>lemma
abuses	abuse
analyses	analysis
appendices	appendix
ate	eat
axes	axis
bases	base
beat	beat
became	become
began	begin
begun	begin
bent	bend
bet	bet
bit	bite
bitten	bite
bled	bleed
blew	blow
blown	blow
bought	buy
bred	breed
broke	break
broken	break
brought	bring
browses	browse
built	build
burnt	burn
burst	burst
came	come
cases	case
caught	catch
causes	cause
chances	chance
children	child
choices	choice
chose	choose
chosen	choose
classes	class
clothes	clothes
cookies	cookie
courses	course
crept	creep
crises	crisis
criteria	criterion
cut	cut
databases	database
ddos	ddos
dealt	deal
devices	device
did	do
does	do
drank	drink
drawn	draw
drew	draw
driven	drive
drove	drive
drunk	drink
dug	dig
eaten	eat
fallen	fall
fed	feed
feet	foot
fell	fall
felt	feel
fled	flee
flew	fly
flown	fly
forgave	forgive
forgiven	forgive
forgot	forget
forgotten	forget
fought	fight
froze	freeze
frozen	freeze
gave	give
geese	goose
given	give
gone	go
got	get
gotten	get
grew	grow
ground	grind
grown	grow
having	have
heard	hear
held	hold
hid	hide
hidden	hide
hit	hit
houses	house
hung	hang
hypotheses	hypothesis
indices	index
instances	instance
interfaces	interface
kept	keep
knew	know
known	know
laid	lay
lain	lie
leapt	leap
learnt	learn
led	lead
left	leave
lent	lend
let	let
lice	louse
licences	licence
licenses	license
lit	light
lost	lose
matrices	matrix
meant	mean
men	man
met	meet
mice	mouse
mistaken	mistake
mistook	mistake
movies	movie
news	news
notices	notice
offences	offence
oxen	ox
paid	pay
phases	phase
phenomena	phenomenon
phrases	phrase
pieces	piece
places	place
prices	price
purposes	purpose
quit	quit
ran	run
rang	ring
releases	release
resources	resource
responses	response
ridden	ride
risen	rise
rode	ride
rose	rise
rung	ring
said	say
sang	sing
sank	sink
sat	sit
saw	see
seen	see
sent	send
sentences	sentence
series	series
services	service
shaken	shake
shed	shed
shone	shine
shook	shake
shot	shoot
shrank	shrink
shut	shut
slept	sleep
slid	slide
smelt	smell
sold	sell
sought	seek
sources	source
spaces	space
spat	spit
species	species
sped	speed
spent	spend
spilt	spill
spoke	speak
spoken	speak
sprang	spring
spread	spread
sprung	spring
spun	spin
stank	stink
statuses	status
stole	steal
stolen	steal
stood	stand
strode	stride
strove	strive
struck	strike
stuck	stick
stung	sting
sung	sing
sunk	sink
surfaces	surface
swam	swim
swept	sweep
swore	swear
sworn	swear
swum	swim
taken	take
taught	teach
teeth	tooth
theses	thesis
thought	think
threw	throw
thrown	throw
told	tell
took	take
tore	tear
torn	tear
trod	tread
understood	understand
undid	undo
undone	undo
upheld	uphold
upset	upset
used	use
uses	use
using	use
vertices	vertex
viruses	virus
voices	voice
went	go
wept	weep
withdrawn	withdraw
withdrew	withdraw
woke	wake
woken	wake
women	woman
won	win
wore	wear
worn	wear
wound	wind
wove	weave
woven	weave
written	write
wrote	write
wrung	wring
)lem";

}  // namespace cti::detail
